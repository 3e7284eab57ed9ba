"""The two duals of a left bialgebroid, as right bialgebroids.

U_* is the space of k-linear psi: U -> A with psi(s(a)u) = a psi(u);
U^* the space of phi with phi(t(a)u) = phi(u) a.  Functionals are stored
as dA x dU matrices.  Structure maps:

    U_*:  (psi psi')(u) = psi'( t(psi(u_2)) u_1 )
          s(a) = eps(.)a,   t(a) = eps(. t(a)),   eta(psi) = psi(1)
          coproduct solved from  psi(u u') = psi_1( u s(psi_2(u')) )

    U^*:  (phi phi')(u) = phi'( s(phi(u_1)) u_2 )
          s(a) = eps(. s(a)),  t(a) = a eps(.),   eta(phi) = phi(1)
          coproduct solved from  phi(u u') = phi_1( u t(phi_2(u')) )
"""

import numpy as np

from .algebra import AlgebraPresentation
from .bialgebroid import LeftBialgebroid, RightBialgebroid
from .hopf import translate_left_mat, translate_right_mat
from .linalg import invert, kernel_basis, rank, rref, solve_affine
from .report import Report

__all__ = [
    "DualBialgebroid",
    "left_dual",
    "right_dual",
    "s_upper_star",
    "s_lower_star",
    "dual_action",
    "comodule_to_dual_module",
    "biduality_report",
]


class CoordSolver:
    """Express vectors in the span of a fixed independent column basis."""

    def __init__(self, field, columns):
        self.field = field
        self.b = np.stack(columns, axis=1)
        _, pivots = rref(field, self.b.T)
        self.rows = pivots
        self.inv = invert(field, self.b[pivots, :])

    def coords(self, v, check=True):
        x = self.field.matmul(self.inv, np.asarray(v)[self.rows])
        if check and not self.field.equal(self.field.matmul(self.b, x), v):
            raise ValueError("vector is not in the span")
        return x


class DualBialgebroid(RightBialgebroid):
    """A dual right bialgebroid with its functional realization kept."""

    def __init__(self, b, which, funcs, algebra, s_map, t_map, delta, counit):
        super().__init__(
            b.A, algebra, s_map, t_map, delta, counit,
            name=f"{b.name}{'_*' if which == 'left' else '^*'}",
        )
        self.b = b
        self.which = which  # 'left' for U_*, 'right' for U^*
        self.funcs = funcs
        self.solver = CoordSolver(b.field, [m.reshape(-1) for m in funcs])

    @property
    def dim(self):
        return len(self.funcs)

    def functional(self, coords):
        """The dA x dU matrix of the functional with given coordinates."""
        f = self.field
        out = f.zeros(self.funcs[0].shape)
        for i, c in enumerate(np.asarray(coords)):
            if c != f.zero:
                out = out + c * self.funcs[i]
        return f.mod(out)

    def coords_of(self, func_matrix):
        return self.solver.coords(np.asarray(func_matrix).reshape(-1))

    def pair(self, coords, u):
        """<u, psi> as an element of A."""
        return self.field.matmul(self.functional(coords), u)

    def as_left_bialgebroid(self):
        """Read the dual as a left bialgebroid (used when it is
        commutative, e.g. for jet algebroids); the coproduct stays lazy."""
        delta = self._delta if callable(self._delta) else self.delta
        if self.which == "left":
            # the stored lift has its legs in the right-bialgebroid order;
            # the left reading wants them the other way round
            f, d = self.field, self.U.dim

            def unflip(src=delta):
                lift = src() if callable(src) else src
                return f.mod(lift.reshape(d, d, d).swapaxes(0, 1).reshape(d * d, d))

            delta = unflip
        return LeftBialgebroid(
            self.A, self.U, self.s_map, self.t_map,
            delta, self.counit, name=self.name,
        )


def _functional_basis(b, which):
    """Solve the A-linearity constraints for a basis of U_* or U^*."""
    f = b.field
    da, du = b.A.dim, b.U.dim
    n = da * du
    rows = []
    for a in range(b.A.dim):
        move = b.Ls[a] if which == "left" else b.Lt[a]
        scal = (
            b.A.basis_left_mults[a]
            if which == "left"
            else b.A.basis_right_mults[a]
        )
        # constraint F @ move = scal @ F, one row per (output coord, column)
        for j in range(du):
            for r in range(da):
                row = f.zeros(n)
                for jp in range(du):
                    row[r * du + jp] += move[jp, j]
                for rp in range(da):
                    row[rp * du + j] -= scal[r, rp]
                rows.append(f.mod(row))
    ker = kernel_basis(f, np.stack(rows))
    return [v.reshape(da, du) for v in ker]


def _build_dual(b, which):
    f = b.field
    da, du = b.A.dim, b.U.dim
    funcs = _functional_basis(b, which)
    d = len(funcs)
    solver = CoordSolver(f, [m.reshape(-1) for m in funcs])

    mul = f.zeros((d, d, d))
    for i in range(d):
        for j in range(d):
            g = f.zeros((da, du))
            for p in range(du):
                acc = f.zeros(da)
                for k, l, c in b.delta_sparse[p]:
                    if which == "left":
                        w = b.U.mult(b.t_of(f.matmul(funcs[i], b.U.basis(l))), b.U.basis(k))
                    else:
                        w = b.U.mult(b.s_of(f.matmul(funcs[i], b.U.basis(k))), b.U.basis(l))
                    acc = acc + c * f.matmul(funcs[j], w)
                g[:, p] = f.mod(acc)
            mul[i, j] = solver.coords(g.reshape(-1))

    unit = solver.coords(b.counit.reshape(-1))
    alg = AlgebraPresentation(f, mul, unit)

    s_map = f.zeros((d, da))
    t_map = f.zeros((d, da))
    for a in range(da):
        av = b.A.basis(a)
        if which == "left":
            smat = f.matmul(b.A.right_mult(av), b.counit)  # eps(.) a
            tmat = f.matmul(b.counit, b.U.right_mult(b.t_of(av)))  # eps(. t(a))
        else:
            smat = f.matmul(b.counit, b.U.right_mult(b.s_of(av)))  # eps(. s(a))
            tmat = f.matmul(b.A.left_mult(av), b.counit)  # a eps(.)
        s_map[:, a] = solver.coords(smat.reshape(-1))
        t_map[:, a] = solver.coords(tmat.reshape(-1))

    counit = f.zeros((da, d))
    for i in range(d):
        counit[:, i] = f.matmul(funcs[i], b.U.unit)

    def delta_thunk():
        return _solve_dual_coproduct(b, which, funcs, solver)

    return DualBialgebroid(b, which, funcs, alg, s_map, t_map, delta_thunk, counit)


def _solve_dual_coproduct(b, which, funcs, solver):
    """Solve the defining linear system for the dual coproduct lift."""
    f = b.field
    da, du = b.A.dim, b.U.dim
    d = len(funcs)
    # column (i, j): the functional (p, q) -> psi_i( e_p s(psi_j(e_q)) )
    # (for U_*), resp. phi_i( e_p t(phi_j(e_q)) ) (for U^*)
    cols = f.zeros((du * du * da, d * d))
    emb = b.s_of if which == "left" else b.t_of
    for j in range(d):
        rmults = [
            b.U.right_mult(emb(f.matmul(funcs[j], b.U.basis(q))))
            for q in range(du)
        ]
        for i in range(d):
            col = f.zeros((du, du, da))
            for q in range(du):
                col[:, q, :] = f.matmul(funcs[i], rmults[q]).T
            cols[:, i * d + j] = col.reshape(-1)
    lift = f.zeros((d * d, d))
    for m in range(d):
        rhs = f.zeros((du, du, da))
        for p in range(du):
            rhs[p, :, :] = f.matmul(funcs[m], b.U.mul[p].T).T
        sol = solve_affine(f, cols, rhs.reshape(-1))
        if sol is None:
            raise ValueError("dual coproduct system is inconsistent")
        lift[:, m] = sol[0]
    if which == "left":
        # the solved legs are balanced the mirrored way round; flip them so
        # the stored lift matches the right-bialgebroid storage convention
        lift = f.mod(lift.reshape(d, d, d).swapaxes(0, 1).reshape(d * d, d))
    return lift


def left_dual(b):
    if "dual_left" not in b._cache:
        b._cache["dual_left"] = _build_dual(b, "left")
    return b._cache["dual_left"]


def right_dual(b):
    if "dual_right" not in b._cache:
        b._cache["dual_right"] = _build_dual(b, "right")
    return b._cache["dual_right"]


def s_upper_star(b):
    """Matrix of S^*: U^* -> U_*, S^*(phi)(u) = eps(u_+ t(phi(u_-))).

    Requires a left Hopf structure.  Columns are indexed by the U^* basis,
    values in U_* coordinates.
    """
    f = b.field
    lo, hi = left_dual(b), right_dual(b)
    tl = translate_left_mat(b)
    du = b.U.dim
    out = f.zeros((lo.dim, hi.dim))
    for m in range(hi.dim):
        g = f.zeros((b.A.dim, du))
        for u in range(du):
            acc = f.zeros(b.A.dim)
            for x, y, c in _pairs(f, tl[:, u], du):
                val = f.matmul(hi.funcs[m], b.U.basis(y))
                acc = acc + c * b.eps(b.U.mult(b.U.basis(x), b.t_of(val)))
            g[:, u] = f.mod(acc)
        out[:, m] = lo.coords_of(g)
    return out


def s_lower_star(b):
    """Matrix of S_*: U_* -> U^*, S_*(psi)(u) = eps(u_[+] s(psi(u_[-]))).

    Requires a right Hopf structure.
    """
    f = b.field
    lo, hi = left_dual(b), right_dual(b)
    tr = translate_right_mat(b)
    du = b.U.dim
    out = f.zeros((hi.dim, lo.dim))
    for m in range(lo.dim):
        g = f.zeros((b.A.dim, du))
        for u in range(du):
            acc = f.zeros(b.A.dim)
            for x, y, c in _pairs(f, tr[:, u], du):
                val = f.matmul(lo.funcs[m], b.U.basis(y))
                acc = acc + c * b.eps(b.U.mult(b.U.basis(x), b.s_of(val)))
            g[:, u] = f.mod(acc)
        out[:, m] = hi.coords_of(g)
    return out


def _pairs(f, vec, d):
    out = []
    for idx in np.nonzero(np.asarray(vec))[0]:
        out.append((idx // d, idx % d, f.canon(vec[idx])))
    return out


def dual_action(b, dual, kind):
    """Left U-action matrices on a dual, per U-basis element.

    kind 'harpoon':  (u . psi)(v) = psi(v u)          (either dual)
    kind 'bullet' on U^*: (u . phi)(v) = eps(u_+ s(phi(u_- v)))
    kind 'bullet' on U_*: (u . psi)(v) = eps(u_[+] s(psi(u_[-] v)))
    """
    f = b.field
    du = b.U.dim
    mats = []
    if kind == "harpoon":
        for u in range(du):
            ru = b.U.right_mult(b.U.basis(u))
            cols = [
                dual.coords_of(f.matmul(dual.funcs[m], ru)) for m in range(dual.dim)
            ]
            mats.append(np.stack(cols, axis=1))
        return mats
    tmat = translate_left_mat(b) if dual.which == "right" else translate_right_mat(b)
    for u in range(du):
        pairs = _pairs(f, tmat[:, u], du)
        cols = []
        for m in range(dual.dim):
            g = f.zeros((b.A.dim, du))
            for v in range(du):
                acc = f.zeros(b.A.dim)
                for x, y, c in pairs:
                    val = f.matmul(dual.funcs[m], b.U.mul[y, v])
                    acc = acc + c * b.eps(b.U.mult(b.U.basis(x), b.s_of(val)))
                g[:, v] = f.mod(acc)
            cols.append(dual.coords_of(g))
        mats.append(np.stack(cols, axis=1))
    return mats


def comodule_to_dual_module(b, com):
    """Turn a comodule into a right module over the matching dual.

    Right comodule M -> right U_*-module:  m . psi = m_(0) . psi(m_(1)).
    Left comodule N -> right U^*-module:   n . phi = phi(n_(-1)) . n_(0).

    Returns action matrices per dual-basis index (written on the left, so
    composition is contravariant).
    """
    from .algebra import sum_action
    from .bialgebroid import sparse_pairs

    f = b.field
    du = b.U.dim
    dual = left_dual(b) if com.side == "right" else right_dual(b)
    mats = []
    for m in range(dual.dim):
        out = f.zeros((com.dim, com.dim))
        for i in range(com.dim):
            lift = f.mod(com.coaction[:, i])
            col = f.zeros(com.dim)
            if com.side == "right":
                for i2, k, c in sparse_pairs(lift, com.dim, du, f):
                    val = f.matmul(dual.funcs[m], b.U.basis(k))
                    col = col + c * sum_action(f, com.action, val)[:, i2]
            else:
                for k, i2, c in sparse_pairs(lift, du, com.dim, f):
                    val = f.matmul(dual.funcs[m], b.U.basis(k))
                    col = col + c * sum_action(f, com.action, val)[:, i2]
            out[:, i] = f.mod(col)
        mats.append(out)
    return dual, mats


def biduality_report(b):
    """Check that u |-> <u, .> embeds U into the left dual of U_* and is
    an algebra map for the dual-of-dual product."""
    f = b.field
    rep = Report(f"{b.name} biduality")
    lo = left_dual(b)
    du, d = b.U.dim, lo.dim
    # pairing matrix: P[m, u] = coords-free pairing via counit row 0?  Use
    # full A-valued pairing flattened: Phi_u = (psi_m -> <u, psi_m>) in A^d
    phi = f.zeros((d * b.A.dim, du))
    for u in range(du):
        for m in range(d):
            phi[m * b.A.dim : (m + 1) * b.A.dim, u] = f.matmul(
                lo.funcs[m], b.U.basis(u)
            )
    rep.add("biduality.injective", rank(f, phi) == du)
    rep.add("biduality.dimension", d == du)

    # candidate product on the image: (Phi Phi')(psi) = Phi(psi_2 t(Phi'(psi_1)))
    dl = lo.delta
    ok = True
    for u in range(du):
        for v in range(du):
            target = _phi_vec(b, lo, b.U.mul[u, v])
            got = f.zeros(d * b.A.dim)
            for m in range(d):
                acc = f.zeros(b.A.dim)
                for i, j, c in _pairs(f, dl[:, m], d):
                    val = f.matmul(lo.funcs[i], b.U.basis(v))
                    w = lo.U.mult(
                        lo.U.basis(j), _lincomb(f, lo.t_map, val)
                    )
                    pairing = f.matmul(_func_of(f, lo, w), b.U.basis(u))
                    acc = acc + c * pairing
                got[m * b.A.dim : (m + 1) * b.A.dim] = f.mod(acc)
            if not f.equal(got, target):
                ok = False
    rep.add("biduality.multiplicative", ok)
    return rep


def _phi_vec(b, lo, uvec):
    f = b.field
    out = f.zeros(lo.dim * b.A.dim)
    for m in range(lo.dim):
        out[m * b.A.dim : (m + 1) * b.A.dim] = f.matmul(lo.funcs[m], uvec)
    return out


def _lincomb(f, mat, coeffs):
    return f.matmul(mat, coeffs)


def _func_of(f, lo, coords):
    return lo.functional(coords)
