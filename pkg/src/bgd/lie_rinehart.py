"""Restricted Lie-Rinehart algebras over F_p, their restricted enveloping
bialgebroids and jet algebroids.

A restricted Lie-Rinehart algebra here is a free A-module L = A^n with a
bracket given by structure constants f_{ij}^k in A, an anchor sending each
generator to a derivation of A, and a p-operation on the generators.
The restricted enveloping algebra has k-basis {a_r e^alpha} with
alpha in [0, p-1]^n (PBW), products computed by straightening:

    e_i (a Y)        = a (e_i Y) + anchor_i(a) Y
    e_i e_j Y (j<i)  = e_j (e_i Y) + [e_i, e_j] Y
    e_i^p Y          = iota(e_i^[p]) Y
"""

import numpy as np

from .algebra import AlgebraPresentation
from .bialgebroid import LeftBialgebroid
from .duals import left_dual
from .report import Report

__all__ = [
    "RestrictedLieRinehart",
    "restricted_enveloping",
    "jet_algebroid",
    "jet_lambda_coords",
    "crossed_product",
]


class RestrictedLieRinehart:
    """Structure constants of a restricted Lie-Rinehart algebra.

    bracket[i, j, k] in A is the e_k-coefficient of [e_i, e_j];
    anchors[i] is the derivation matrix of omega(e_i) on A;
    pops[i, k] in A is the e_k-coefficient of e_i^[p].
    """

    def __init__(self, base, n, bracket, anchors, pops, name="L"):
        self.A = base
        self.field = base.field
        if self.field.kind != "prime":
            raise ValueError("restricted structures require a prime field")
        self.p = self.field.p
        self.n = n
        da = base.dim
        self.bracket = self.field.mod(np.asarray(bracket).reshape(n, n, n, da))
        self.anchors = [self.field.mod(np.asarray(m)) for m in anchors]
        self.pops = self.field.mod(np.asarray(pops).reshape(n, n, da))
        self.name = name

    def anchor_of(self, x):
        """Derivation matrix of an L-element x (shape n x dA)."""
        f = self.field
        out = f.zeros((self.A.dim, self.A.dim))
        for i in range(self.n):
            out = out + f.matmul(self.A.left_mult(x[i]), self.anchors[i])
        return f.mod(out)

    def bracket_of(self, x, y):
        """[x, y] for L-elements, via the Leibniz rule in both slots."""
        f, a_ = self.field, self.A
        out = f.zeros((self.n, a_.dim))
        wx, wy = self.anchor_of(x), self.anchor_of(y)
        for i in range(self.n):
            for j in range(self.n):
                ab = a_.mult(x[i], y[j])
                for k in range(self.n):
                    out[k] = out[k] + a_.mult(ab, self.bracket[i, j, k])
        for j in range(self.n):
            out[j] = out[j] + a_.mult(f.matmul(wx, y[j]), a_.unit)
        for i in range(self.n):
            out[i] = out[i] - f.matmul(wy, x[i])
        return f.mod(out)

    def gen(self, i):
        x = self.field.zeros((self.n, self.A.dim))
        x[i] = self.A.unit
        return x

    def check(self):
        rep = Report(self.name)
        f, a_ = self.field, self.A
        sub = a_.check()
        for item in sub.items:
            item.check_id = "base." + item.check_id
        rep.items.extend(sub.items)
        rep.add("base.commutative", a_.is_commutative())

        ok_alt = all(
            f.is_zero(self.bracket_of(self.gen(i), self.gen(i)))
            for i in range(self.n)
        )
        ok_skew = True
        for i in range(self.n):
            for j in range(self.n):
                ok_skew &= f.is_zero(
                    f.mod(
                        self.bracket_of(self.gen(i), self.gen(j))
                        + self.bracket_of(self.gen(j), self.gen(i))
                    )
                )
        rep.add("bracket.alternating", ok_alt)
        rep.add("bracket.antisymmetric", ok_skew)

        ok = True
        for i in range(self.n):
            for j in range(self.n):
                for k in range(self.n):
                    x, y, z = self.gen(i), self.gen(j), self.gen(k)
                    jac = (
                        self.bracket_of(x, self.bracket_of(y, z))
                        + self.bracket_of(y, self.bracket_of(z, x))
                        + self.bracket_of(z, self.bracket_of(x, y))
                    )
                    ok &= f.is_zero(f.mod(jac))
        rep.add("bracket.jacobi", ok)

        ok = True
        for i in range(self.n):
            w = self.anchors[i]
            for r in range(a_.dim):
                for s in range(a_.dim):
                    er, es = a_.basis(r), a_.basis(s)
                    lhs = f.matmul(w, a_.mult(er, es))
                    rhs = a_.mult(f.matmul(w, er), es) + a_.mult(er, f.matmul(w, es))
                    ok &= f.equal(lhs, f.mod(rhs))
        rep.add("anchor.derivation", ok)

        ok = True
        for i in range(self.n):
            for j in range(self.n):
                lhs = self.anchor_of(self.bracket_of(self.gen(i), self.gen(j)))
                wi, wj = self.anchors[i], self.anchors[j]
                rhs = f.mod(f.matmul(wi, wj) - f.matmul(wj, wi))
                ok &= f.equal(lhs, rhs)
        rep.add("anchor.morphism", ok)

        ok = True
        for i in range(self.n):
            wp = f.eye(a_.dim)
            for _ in range(self.p):
                wp = f.matmul(wp, self.anchors[i])
            ok &= f.equal(self.anchor_of(self.pops[i]), wp)
        rep.add("anchor.restricted", ok)

        ok = True
        for i in range(self.n):
            for j in range(self.n):
                y = self.gen(j)
                ad = y
                for _ in range(self.p):
                    ad = self.bracket_of(self.gen(i), ad)
                ok &= f.equal(self.bracket_of(self.pops[i], y), ad)
        rep.add("pop.adjoint", ok)
        return rep


class _Envelope:
    """Straightening engine for the restricted enveloping algebra."""

    def __init__(self, lr):
        self.lr = lr
        self.f = lr.field
        self.p = lr.p
        self.n = lr.n
        self.da = lr.A.dim
        self.dim = self.da * self.p**self.n
        self._pow_memo = {}

    def index(self, r, alpha):
        code = 0
        for a in alpha:
            code = code * self.p + a
        return r * self.p**self.n + code

    def decode(self, idx):
        r, code = divmod(idx, self.p**self.n)
        alpha = []
        for _ in range(self.n):
            code, a = divmod(code, self.p)
            alpha.append(a)
        return r, tuple(reversed(alpha))

    def amul(self, avec, elem):
        """Multiply an element on the left by a in A (PBW coefficients)."""
        out = {}
        a_ = self.lr.A
        for (r, alpha), c in elem.items():
            prod = a_.mult(avec, a_.basis(r))
            for t in np.nonzero(prod)[0]:
                key = (int(t), alpha)
                out[key] = self.f.add(out.get(key, 0), self.f.mul(c, prod[t]))
        return {k: v for k, v in out.items() if v != 0}

    def unit_elem(self, alpha):
        out = {}
        for r in np.nonzero(self.lr.A.unit)[0]:
            out[(int(r), alpha)] = self.f.canon(self.lr.A.unit[r])
        return out

    def gen_pow(self, i, beta):
        """e_i . e^beta as a straightened element."""
        key = (i, beta)
        if key in self._pow_memo:
            return self._pow_memo[key]
        nz = [j for j in range(self.n) if beta[j] > 0]
        if not nz or i < nz[0]:
            out = self.unit_elem(_bump(beta, i))
        elif i == nz[0] and beta[i] + 1 < self.p:
            out = self.unit_elem(_bump(beta, i))
        elif i == nz[0]:
            rest = _drop(beta, i, self.p - 1)
            out = {}
            for k in range(self.n):
                out = _acc(self.f, out, self.amul(self.lr.pops[i, k], self.gen_pow(k, rest)))
        else:
            j = nz[0]
            rest = _drop(beta, j, 1)
            inner = self.gen_pow(i, rest)
            out = self.gen_mult(j, inner)
            for k in range(self.n):
                out = _acc(
                    self.f, out,
                    self.amul(self.lr.bracket[i, j, k], self.gen_pow(k, rest)),
                )
        self._pow_memo[key] = out
        return out

    def gen_mult(self, i, elem):
        """e_i . elem for an arbitrary straightened element."""
        out = {}
        a_ = self.lr.A
        for (r, alpha), c in elem.items():
            main = self.amul(a_.basis(r), self.gen_pow(i, alpha))
            out = _acc(self.f, out, _scale(self.f, main, c))
            dvec = self.f.mod(self.lr.anchors[i][:, r])
            for t in np.nonzero(dvec)[0]:
                key = (int(t), alpha)
                out[key] = self.f.add(out.get(key, 0), self.f.mul(c, dvec[t]))
        return {k: v for k, v in out.items() if v != 0}

    def product(self, r, alpha, s, beta):
        """(a_r e^alpha)(a_s e^beta) as a straightened element."""
        y = {(s, beta): 1}
        for i in reversed(range(self.n)):
            for _ in range(alpha[i]):
                y = self.gen_mult(i, y)
        return self.amul(self.lr.A.basis(r), y)

    def to_vec(self, elem):
        v = self.f.zeros(self.dim)
        for (r, alpha), c in elem.items():
            v[self.index(r, alpha)] = c
        return v


def _bump(beta, i):
    out = list(beta)
    out[i] += 1
    return tuple(out)


def _drop(beta, i, amount):
    out = list(beta)
    out[i] -= amount
    return tuple(out)


def _acc(f, dst, src):
    for k, v in src.items():
        nv = f.add(dst.get(k, 0), v)
        if nv == 0:
            dst.pop(k, None)
        else:
            dst[k] = nv
    return dst


def _scale(f, elem, c):
    return {k: f.mul(v, c) for k, v in elem.items()}


def restricted_enveloping(lr):
    """The restricted enveloping algebra of lr as a left bialgebroid.

    k-basis a_r e^alpha; s = t = the inclusion of A; the generators are
    primitive; eps(a e^alpha) = a if alpha = 0 and 0 otherwise.
    """
    eng = _Envelope(lr)
    f = lr.field
    d = eng.dim
    da = lr.A.dim
    mul = f.zeros((d, d, d))
    for i in range(d):
        r, alpha = eng.decode(i)
        for j in range(d):
            s, beta = eng.decode(j)
            mul[i, j] = eng.to_vec(eng.product(r, alpha, s, beta))
    labels = []
    for i in range(d):
        r, alpha = eng.decode(i)
        mono = "".join(
            f"e{k + 1}^{a}" if a > 1 else (f"e{k + 1}" if a else "")
            for k, a in enumerate(alpha)
        )
        labels.append(f"{lr.A.labels[r]}{('*' + mono) if mono else ''}")
    unit = eng.to_vec(eng.unit_elem((0,) * lr.n))
    total = AlgebraPresentation(f, mul, unit, labels)

    s_map = f.zeros((d, da))
    for r in range(da):
        s_map[eng.index(r, (0,) * lr.n), r] = f.one

    counit = f.zeros((da, d))
    for r in range(da):
        counit[r, eng.index(r, (0,) * lr.n)] = f.one

    from .linalg import apply_leg1, apply_leg2

    gens = [eng.to_vec(eng.unit_elem(_bump((0,) * lr.n, i))) for i in range(lr.n)]
    rgens = [total.right_mult(g) for g in gens]
    delta = f.zeros((d * d, d))
    for idx in range(d):
        r, alpha = eng.decode(idx)
        base = eng.to_vec(eng.amul(lr.A.basis(r), eng.unit_elem((0,) * lr.n)))
        t = np.outer(base, unit).reshape(-1)
        for i in range(lr.n):
            for _ in range(alpha[i]):
                t = f.mod(
                    apply_leg1(f, rgens[i], t, d, d) + apply_leg2(f, rgens[i], t, d, d)
                )
        delta[:, idx] = t

    b = LeftBialgebroid(lr.A, total, s_map, s_map, delta, counit, name=f"U({lr.name})")
    b._cache["lr"] = lr
    b._cache["lr_engine"] = eng
    b._cache["lr_gens"] = gens
    return b


def enveloping_report(b):
    """Extra consistency checks tying the envelope back to its input:
    generators are primitive, D^p = D^[p] holds, and the Hochschild-type
    formula (aD)^p = a^p D^[p] + (a omega_D)^{p-1}(a) D holds in U."""
    lr = b._cache["lr"]
    eng = b._cache["lr_engine"]
    gens = b._cache["lr_gens"]
    f = lr.field
    rep = Report(b.name)
    d = b.U.dim

    ok = True
    for g in gens:
        lift = b.delta_of(g)
        expect = f.mod(
            np.outer(g, b.U.unit).reshape(-1) + np.outer(b.U.unit, g).reshape(-1)
        )
        ok &= np.array_equal(b.T0.project(lift), b.T0.project(expect))
    rep.add("generators.primitive", ok)

    ok = True
    for i in range(lr.n):
        lhs = b.U.power(gens[i], lr.p)
        rhs = f.zeros(d)
        for k in range(lr.n):
            rhs = rhs + eng.to_vec(
                eng.amul(lr.pops[i, k], eng.unit_elem(_bump((0,) * lr.n, k)))
            )
        ok &= f.equal(lhs, f.mod(rhs))
    rep.add("pop.power_rule", ok)

    ok = True
    for i in range(lr.n):
        for r in range(lr.A.dim):
            a = lr.A.basis(r)
            x = eng.to_vec(eng.amul(a, eng.unit_elem(_bump((0,) * lr.n, i))))
            lhs = b.U.power(x, lr.p)
            ap = lr.A.power(a, lr.p)
            rhs = f.zeros(d)
            for k in range(lr.n):
                rhs = rhs + eng.to_vec(
                    eng.amul(
                        lr.A.mult(ap, lr.pops[i, k]),
                        eng.unit_elem(_bump((0,) * lr.n, k)),
                    )
                )
            deriv = f.matmul(lr.A.left_mult(a), lr.anchors[i])
            acted = a
            for _ in range(lr.p - 1):
                acted = f.matmul(deriv, acted)
            rhs = rhs + eng.to_vec(
                eng.amul(lr.A.mult(acted, lr.A.unit), eng.unit_elem(_bump((0,) * lr.n, i)))
            )
            ok &= f.equal(lhs, f.mod(rhs))
    rep.add("pop.hochschild", ok)
    return rep


def jet_algebroid(b):
    """The jet algebroid of a restricted enveloping algebra: its left dual
    read as a (commutative) left bialgebroid."""
    dual = left_dual(b)
    return dual


def jet_lambda_coords(b, dual=None):
    """Coordinates of the jet generators lambda_i (dual to the e_i) in the
    dual basis: <lambda_i, a e^alpha> = a if alpha = 1_i else 0."""
    dual = dual or left_dual(b)
    eng = b._cache["lr_engine"]
    lr = b._cache["lr"]
    f = b.field
    out = []
    for i in range(lr.n):
        func = f.zeros((lr.A.dim, b.U.dim))
        for r in range(lr.A.dim):
            func[r, eng.index(r, _bump((0,) * lr.n, i))] = f.one
        out.append(dual.coords_of(func))
    return out


def crossed_product(base, n, g_bracket, g_pops, sigma, name="AxG"):
    """The crossed-product Lie-Rinehart structure A (x) g for a restricted
    Lie algebra g acting on A by derivations sigma."""
    f = base.field
    da = base.dim
    bracket = f.zeros((n, n, n, da))
    for i in range(n):
        for j in range(n):
            for k in range(n):
                bracket[i, j, k] = f.canon(g_bracket[i][j][k]) * base.unit
    pops = f.zeros((n, n, da))
    for i in range(n):
        for k in range(n):
            pops[i, k] = f.canon(g_pops[i][k]) * base.unit
    anchors = [f.mod(np.asarray(m)) for m in sigma]
    return RestrictedLieRinehart(base, n, bracket, anchors, pops, name=name)
