"""Integral spaces, invariance characterization, and Maschke separability."""

import itertools

import numpy as np

from .hopf import is_right_hopf, translate_right
from .linalg import apply_leg1, apply_leg2, kernel_basis, rank, solve_affine
from .report import Report


class IntegralSpace:
    """A k-basis of one-sided integrals with A-module diagnostics.

    ``basis`` is a list of total-algebra vectors.  ``action`` holds the
    right multiplications by t(a) per A-basis index; the span is closed
    under them, and ``free_rank_one``/``generator``/``projective_summand``
    describe the span as an A-module through that action.
    """

    def __init__(self, side, base, basis, action):
        self.side = side
        self.base = base
        self.field = base.field
        self.basis = [base.field.mod(np.asarray(v)) for v in basis]
        self.action = action
        self.generator = None
        self.free_rank_one = self._find_generator()
        self.projective_summand = self._split_test()

    @property
    def dim(self):
        return len(self.basis)

    def span_matrix(self):
        if not self.basis:
            return self.field.zeros((self.action[0].shape[0], 0))
        return np.stack(self.basis, axis=1)

    def contains(self, v):
        if not self.basis:
            return self.field.is_zero(self.field.mod(np.asarray(v)))
        return solve_affine(self.field, self.span_matrix(), v) is not None

    def _orbit(self, g):
        return np.stack([self.field.matmul(m, g) for m in self.action], axis=1)

    def _find_generator(self):
        f, da = self.field, self.base.dim
        if self.dim != da:
            return False
        for g in self._candidates():
            if rank(f, self._orbit(g)) == da:
                self.generator = f.mod(np.asarray(g))
                return True
        return False

    def _candidates(self):
        f, m = self.field, self.dim
        for g in self.basis:
            yield g
        if f.kind == "prime" and f.p**m <= 2048:
            for cs in itertools.product(range(f.p), repeat=m):
                if sum(cs) > 1 or (any(cs) and max(cs) > 1):
                    yield f.mod(sum(c * g for c, g in zip(cs, self.basis)))

    def _coords(self, v):
        sol = solve_affine(self.field, self.span_matrix(), v)
        if sol is None:
            raise ValueError("vector escapes the integral span")
        return sol[0]

    def _split_test(self):
        """Whether the span is a direct summand of a free A-module: the
        evaluation A^m -> span, unit column r of factor i -> basis[i].t(a_r),
        admits an A-linear right inverse (a linear solve)."""
        f, m, da = self.field, self.dim, self.base.dim
        if m == 0:
            return True
        # span-coordinate action matrices and the evaluation map
        act = []
        for a in range(da):
            cols = [self._coords(f.matmul(self.action[a], g)) for g in self.basis]
            act.append(np.stack(cols, axis=1))
        ev = f.zeros((m, m * da))
        for i in range(m):
            for r in range(da):
                ev[:, i * da + r] = act[r][:, i]
        rr = [np.kron(f.eye(m), rm) for rm in self.base.basis_right_mults]
        # unknown sigma: span -> A^m, stored column by column
        nb = m * da
        rows, rhs = [], []
        for j in range(m):
            blk = f.zeros((m, m * nb))
            blk[:, j * nb : (j + 1) * nb] = ev
            rows.append(blk)
            e = f.zeros(m)
            e[j] = f.one
            rhs.append(e)
        for a in range(da):
            for j in range(m):
                blk = f.zeros((nb, m * nb))
                for k in range(m):
                    if act[a][k, j] != f.zero:
                        blk[:, k * nb : (k + 1) * nb] += act[a][k, j] * f.eye(nb)
                blk[:, j * nb : (j + 1) * nb] -= rr[a]
                rows.append(f.mod(blk))
                rhs.append(f.zeros(nb))
        return (
            solve_affine(f, np.concatenate(rows, 0), np.concatenate(rhs))
            is not None
        )


def left_integrals(b):
    """The space of l with u l = s(eps(u)) l for all u."""
    f, d = b.field, b.U.dim
    rows = []
    for i in range(d):
        e = b.U.basis(i)
        rows.append(f.mod(b.U.left_mult(e) - b.U.left_mult(b.s_of(b.eps(e)))))
    basis = kernel_basis(f, np.concatenate(rows, axis=0))
    return IntegralSpace("left", b.A, basis, b.Rt)


def right_integrals(w):
    """The space of right integrals of a right bialgebroid, computed as
    left integrals of its standard left-bialgebroid reduction."""
    spc = left_integrals(w.op_coop())
    spc.side = "right"
    return spc


def right_integrals_of_left(b):
    """The mirror space {l : l u = l s(eps(u)) for all u} of a left
    bialgebroid, closed under the left multiplications by s(a)."""
    f, d = b.field, b.U.dim
    rows = []
    for i in range(d):
        e = b.U.basis(i)
        rows.append(f.mod(b.U.right_mult(e) - b.U.right_mult(b.s_of(b.eps(e)))))
    basis = kernel_basis(f, np.concatenate(rows, axis=0))
    spc = IntegralSpace("right", b.A, basis, b.Ls)
    return spc


def integral_invariance_check(b, l, witness=False):
    """Whether u l_[+] (x) l_[-] = l_[+] (x) l_[-] u in U_<# (x)_A |>U for
    all basis u; equivalent to l being a left integral."""
    if not is_right_hopf(b):
        raise ValueError("total algebra is not right Hopf")
    f, d = b.field, b.U.dim
    w = translate_right(b, f.mod(np.asarray(l)))
    q = b.T2
    for i in range(d):
        lhs = q.project(apply_leg1(f, b.U.basis_left_mults[i], w, d, d))
        rhs = q.project(apply_leg2(f, b.U.basis_right_mults[i], w, d, d))
        if not f.equal(lhs, rhs):
            return (False, b.U.labels[i]) if witness else False
    return (True, None) if witness else True


def normalized_left_integral(b, space=None):
    """Some l in the integral span with eps(l) = 1, or None."""
    spc = space if space is not None else left_integrals(b)
    if spc.dim == 0:
        return None
    f = b.field
    sol = solve_affine(f, f.matmul(b.counit, spc.span_matrix()), b.A.unit)
    if sol is None:
        return None
    return f.matmul(spc.span_matrix(), sol[0])


def separability_check(b):
    """A splitting tensor e1 (x) e2 in U_<# (x)_A |>U with e1 e2 = 1 and
    u e1 (x) e2 = e1 (x) e2 u for all u, found by a direct linear solve.
    Returned as an ambient U (x) U lift, or None."""
    f, d = b.field, b.U.dim
    q = b.T2
    sec = q.section_mat
    mult_amb = f.zeros((d, d * d))
    for i in range(d):
        mult_amb[:, i * d : (i + 1) * d] = b.U.mul[i].T
    rows = [f.matmul(mult_amb, sec)]
    rhs = [b.U.unit]
    pm = q.project_mat
    for i in range(d):
        lu = np.kron(b.U.basis_left_mults[i], f.eye(d))
        ru = np.kron(f.eye(d), b.U.basis_right_mults[i])
        rows.append(f.mod(f.matmul(pm, f.mod(lu - ru)) @ sec))
        rhs.append(f.zeros(q.dim))
    sol = solve_affine(f, np.concatenate(rows, 0), np.concatenate(rhs))
    if sol is None:
        return None
    return f.matmul(sec, sol[0])


def counit_splitting(b):
    """A left-module right inverse of the counit, as a dU x dA matrix, or
    None.  Existence is one face of the separability equivalences."""
    f, d, da = b.field, b.U.dim, b.A.dim
    # unknown H: dA columns stacked; constraints eps H = id and
    # left_mult(u) H = H act(u) where act(u)(a) = eps(u s(a)).
    nb = d
    rows, rhs = [], []
    for c in range(da):
        blk = f.zeros((da, da * nb))
        blk[:, c * nb : (c + 1) * nb] = b.counit
        rows.append(blk)
        e = f.zeros(da)
        e[c] = f.one
        rhs.append(e)
    for i in range(d):
        lu = b.U.basis_left_mults[i]
        actu = np.stack(
            [b.act_on_base(b.U.basis(i), b.A.basis(a)) for a in range(da)],
            axis=1,
        )
        for c in range(da):
            blk = f.zeros((d, da * nb))
            blk[:, c * nb : (c + 1) * nb] = lu
            for k in range(da):
                if actu[k, c] != f.zero:
                    blk[:, k * nb : (k + 1) * nb] -= actu[k, c] * f.eye(d)
            rows.append(f.mod(blk))
            rhs.append(f.zeros(d))
    sol = solve_affine(f, np.concatenate(rows, 0), np.concatenate(rhs))
    if sol is None:
        return None
    h = f.zeros((d, da))
    for c in range(da):
        h[:, c] = sol[0][c * nb : (c + 1) * nb]
    return h


def maschke_report(b, name=None):
    """The separability equivalences: normalized integral, splitting of
    multiplication, and splitting of the counit all exist together."""
    rep = Report(name or f"{b.name} separability")
    spc = left_integrals(b)
    rep.add("integrals.defining", all(
        b.field.is_zero(b.field.mod(
            b.U.mult(b.U.basis(i), l)
            - b.U.mult(b.s_of(b.eps(b.U.basis(i))), l)
        ))
        for l in spc.basis for i in range(b.U.dim)
    ))
    norm = normalized_left_integral(b, spc)
    split = separability_check(b)
    eta = counit_splitting(b)
    rep.add("maschke.normalized-integral", norm is not None,
            witness=None if norm is None else b.U.format_elem(norm))
    rep.add("maschke.separable", split is not None)
    rep.add("maschke.counit-splits", eta is not None)
    rep.add(
        "maschke.equivalence",
        (norm is None) == (split is None) == (eta is None),
    )
    if norm is not None and is_right_hopf(b):
        f, d = b.field, b.U.dim
        e = translate_right(b, norm)
        prod = f.zeros(d)
        for i, j, c in _pairs(f, e, d):
            prod = prod + c * b.U.mul[i, j]
        ok = f.equal(f.mod(prod), b.U.unit)
        q = b.T2
        for i in range(d):
            lhs = q.project(apply_leg1(f, b.U.basis_left_mults[i], e, d, d))
            rhs = q.project(apply_leg2(f, b.U.basis_right_mults[i], e, d, d))
            ok = ok and f.equal(lhs, rhs)
        rep.add("maschke.splitting-from-integral", bool(ok))
    return rep


def _pairs(f, vec, d):
    out = []
    for idx in np.nonzero(np.asarray(vec))[0]:
        out.append((idx // d, idx % d, f.canon(vec[idx])))
    return out
