"""Exact linear algebra over F_p and Q.

Scalars over a prime field are python ints in ``[0, p)`` stored in int64
numpy arrays; rationals are :class:`fractions.Fraction` in object arrays.
Row reduction over F_p dispatches to the compiled kernel when available.
"""

from fractions import Fraction

import numpy as np

try:
    from . import _kernel_cy as _kernel
except ImportError:  # pragma: no cover - depends on build environment
    from . import _kernel_py as _kernel

BACKEND = _kernel.BACKEND_NAME

__all__ = [
    "Field",
    "FieldError",
    "SingularMatrixError",
    "Matrix",
    "Subspace",
    "Quotient",
    "BACKEND",
    "rref",
    "rank",
    "kernel_basis",
    "solve_affine",
    "invert",
    "kron_vec",
    "apply_leg1",
    "apply_leg2",
]


class FieldError(ValueError):
    pass


class SingularMatrixError(ValueError):
    pass


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class Field:
    """A prime field F_p or the rationals Q."""

    __slots__ = ("kind", "p")

    def __init__(self, kind, p=None):
        if kind == "prime":
            if p is None or not _is_prime(p):
                raise FieldError(f"not a prime: {p!r}")
        elif kind != "rationals":
            raise FieldError(f"unknown field kind {kind!r}")
        self.kind = kind
        self.p = p

    @classmethod
    def prime(cls, p):
        return cls("prime", p)

    @classmethod
    def rationals(cls):
        return cls("rationals")

    def __eq__(self, other):
        return (
            isinstance(other, Field)
            and self.kind == other.kind
            and self.p == other.p
        )

    def __hash__(self):
        return hash((self.kind, self.p))

    def __repr__(self):
        return f"F_{self.p}" if self.kind == "prime" else "Q"

    # -- scalars ---------------------------------------------------------

    @property
    def zero(self):
        return 0 if self.kind == "prime" else Fraction(0)

    @property
    def one(self):
        return 1 if self.kind == "prime" else Fraction(1)

    def canon(self, x):
        if self.kind == "prime":
            return int(x) % self.p
        return Fraction(x)

    def add(self, a, b):
        return (a + b) % self.p if self.kind == "prime" else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.kind == "prime" else a - b

    def mul(self, a, b):
        return (a * b) % self.p if self.kind == "prime" else a * b

    def neg(self, a):
        return (-a) % self.p if self.kind == "prime" else -a

    def inv(self, a):
        if self.kind == "prime":
            a = a % self.p
            if a == 0:
                raise ZeroDivisionError("inverse of 0")
            return pow(a, self.p - 2, self.p)
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return 1 / Fraction(a)

    def parse(self, s):
        """Parse a scalar from its string form ("2", "-1/3", ...)."""
        if self.kind == "prime":
            return int(Fraction(s)) % self.p if "/" not in s else self.canon(
                Fraction(s).numerator * self.inv(int(Fraction(s).denominator))
            )
        return Fraction(s)

    def format(self, x):
        return str(x)

    # -- arrays ----------------------------------------------------------

    def array(self, data):
        if self.kind == "prime":
            return np.array(data, dtype=np.int64) % self.p
        a = np.empty(np.shape(data), dtype=object)
        a[...] = np.vectorize(Fraction, otypes=[object])(np.array(data, dtype=object))
        return a

    def zeros(self, shape):
        if self.kind == "prime":
            return np.zeros(shape, dtype=np.int64)
        a = np.empty(shape, dtype=object)
        a[...] = Fraction(0)
        return a

    def eye(self, n):
        m = self.zeros((n, n))
        for i in range(n):
            m[i, i] = self.one
        return m

    def mod(self, a):
        return a % self.p if self.kind == "prime" else a

    def matmul(self, a, b):
        return self.mod(a @ b)

    def equal(self, a, b):
        return np.array_equal(self.mod(a), self.mod(b))

    def is_zero(self, a):
        return not np.any(self.mod(a))


def rref(field, m):
    """Reduced row echelon form.  Returns (nonzero rows, pivot columns)."""
    m = np.asarray(m)
    if m.ndim != 2:
        raise ValueError("expected a 2-d array")
    if field.kind == "prime":
        return _kernel.rref_mod(m.copy(), field.p)
    return _rref_frac(m)


def _rref_frac(m):
    rows = [[Fraction(x) for x in row] for row in m]
    nrows = len(rows)
    ncols = m.shape[1]
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        lead = rows[r][c]
        if lead != 1:
            rows[r] = [x / lead for x in rows[r]]
        for i in range(nrows):
            f = rows[i][c]
            if i != r and f != 0:
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    out = np.empty((r, ncols), dtype=object)
    for i in range(r):
        out[i, :] = rows[i]
    return out, pivots


def rank(field, m):
    return len(rref(field, m)[1])


def kernel_basis(field, m):
    """Basis of the right null space {v : m v = 0}, as a list of vectors."""
    m = np.asarray(m)
    ncols = m.shape[1]
    r, pivots = rref(field, m)
    pivot_set = set(pivots)
    free = [j for j in range(ncols) if j not in pivot_set]
    basis = []
    for j in free:
        v = field.zeros(ncols)
        v[j] = field.one
        for i, c in enumerate(pivots):
            v[c] = field.neg(r[i, j])
        basis.append(v)
    return basis


def solve_affine(field, m, b):
    """Solve m x = b.  Returns (particular, homogeneous basis) or None."""
    m = np.asarray(m)
    b = np.asarray(b).reshape(-1, 1)
    aug = np.concatenate([m, b], axis=1)
    ncols = m.shape[1]
    r, pivots = rref(field, aug)
    if pivots and pivots[-1] == ncols:
        return None
    x = field.zeros(ncols)
    for i, c in enumerate(pivots):
        x[c] = r[i, ncols]
    return x, kernel_basis(field, m)


def invert(field, m):
    m = np.asarray(m)
    n = m.shape[0]
    if m.shape[1] != n:
        raise SingularMatrixError("not square")
    aug = np.concatenate([m, field.eye(n)], axis=1)
    r, pivots = rref(field, aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise SingularMatrixError("matrix is singular")
    return r[:, n:]


class Matrix:
    """Thin exact-matrix wrapper used at module boundaries."""

    __slots__ = ("field", "a")

    def __init__(self, field, data):
        self.field = field
        self.a = field.array(data)
        if self.a.ndim != 2:
            raise ValueError("Matrix requires a 2-d array")

    @property
    def shape(self):
        return self.a.shape

    def __matmul__(self, other):
        out = Matrix.__new__(Matrix)
        out.field = self.field
        out.a = self.field.matmul(self.a, other.a)
        return out

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.field.equal(self.a, other.a)
        )

    def rank(self):
        return rank(self.field, self.a)

    def kernel_basis(self):
        return kernel_basis(self.field, self.a)

    def solve(self, b):
        return solve_affine(self.field, self.a, b)

    def inv(self):
        out = Matrix.__new__(Matrix)
        out.field = self.field
        out.a = invert(self.field, self.a)
        return out

    def __repr__(self):
        return f"Matrix({self.field}, {self.a.tolist()!r})"


class Subspace:
    """Row space of a generator list, kept in reduced row echelon form."""

    def __init__(self, field, ncols, gens=()):
        self.field = field
        self.ncols = ncols
        gens = [np.asarray(g) for g in gens]
        if gens:
            self.rows, self.pivots = rref(field, np.stack(gens))
        else:
            self.rows = field.zeros((0, ncols))
            self.pivots = []

    @property
    def dim(self):
        return len(self.pivots)

    def reduce(self, v):
        """Canonical residual of v modulo the subspace (zeros at pivots)."""
        v = np.asarray(v)
        if not self.pivots:
            return self.field.mod(v.copy())
        coeffs = v[self.pivots]
        return self.field.mod(v - coeffs @ self.rows)

    def contains(self, v):
        return self.field.is_zero(self.reduce(v))


class Quotient:
    """Quotient of a free module by a relation span, with explicit
    projection/section in the standard basis.

    The quotient basis is indexed by the non-pivot coordinates of the
    relation rref; ``project`` and ``section`` satisfy project(section(q)) = q
    and ker(project) = relation span.
    """

    def __init__(self, field, ambient_dim, relation_gens=()):
        self.field = field
        self.ambient_dim = ambient_dim
        self.rel = Subspace(field, ambient_dim, relation_gens)
        pivot_set = set(self.rel.pivots)
        self.coords = [j for j in range(ambient_dim) if j not in pivot_set]
        self.dim = len(self.coords)
        self._pmat = None
        self._smat = None

    def project(self, v):
        return self.rel.reduce(v)[self.coords]

    def section(self, q):
        v = self.field.zeros(self.ambient_dim)
        v[self.coords] = q
        return v

    @property
    def project_mat(self):
        if self._pmat is None:
            f = self.field
            p = f.zeros((self.dim, self.ambient_dim))
            for qi, j in enumerate(self.coords):
                p[qi, j] = f.one
            if self.rel.pivots:
                blk = self.rel.rows[:, self.coords].T
                for qi in range(self.dim):
                    for ri, c in enumerate(self.rel.pivots):
                        p[qi, c] = f.neg(blk[qi, ri])
            self._pmat = p
        return self._pmat

    @property
    def section_mat(self):
        if self._smat is None:
            s = self.field.zeros((self.ambient_dim, self.dim))
            for qi, j in enumerate(self.coords):
                s[j, qi] = self.field.one
            self._smat = s
        return self._smat

    def descends(self, op):
        """True if the ambient operator maps the relation span into itself."""
        if not self.rel.pivots:
            return True
        img = self.field.matmul(op, self.rel.rows.T)
        return all(self.rel.contains(img[:, i]) for i in range(img.shape[1]))

    def induced_op(self, op, check=True):
        """Matrix of the operator induced on the quotient."""
        if check and not self.descends(op):
            raise ValueError("operator does not descend to the quotient")
        return self.field.matmul(self.field.matmul(self.project_mat, op), self.section_mat)


def kron_vec(field, v, w):
    return field.mod(np.outer(np.asarray(v), np.asarray(w)).reshape(-1))


def apply_leg1(field, m, vec, d1, d2):
    """(m x I) vec for vec in X (x) Y with dims (d1, d2)."""
    return field.matmul(m, np.asarray(vec).reshape(d1, d2)).reshape(-1)


def apply_leg2(field, m, vec, d1, d2):
    """(I x m) vec."""
    return field.matmul(np.asarray(vec).reshape(d1, d2), m.T).reshape(-1)
