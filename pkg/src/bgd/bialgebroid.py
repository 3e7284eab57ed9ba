"""Left bialgebroid presentations and their axiom checkers.

Conventions.  For a left bialgebroid (U, A, s, t, delta, eps) the four
basic actions are

    a |> u <| b  =  s(a) t(b) u      (left multiplications)
    a >  u  < b  =  u t(a) s(b)      (right multiplications)

The coproduct is stored as a k-linear lift U -> U (x) U; all identities
are evaluated on lifts and compared after projecting to the relevant
balanced-tensor quotient:

    T0 = U_<| (x)_A |>U       relations  t(a)u (x) v - u (x) s(a)v
    T1 = >U (x)_{Aop} U_<|    relations  u t(a) (x) v - u (x) t(a)v
    T2 = U_< (x)^A |>U        relations  u s(a) (x) v - u (x) s(a)v
"""

import numpy as np

from .algebra import TripleQuotient, balanced_tensor, check_action, sum_action
from .linalg import apply_leg1, apply_leg2, kernel_basis, kron_vec
from .report import Report

__all__ = [
    "LeftBialgebroid",
    "RightBialgebroid",
    "ComodulePresentation",
    "check_left_bialgebroid",
    "check_right_bialgebroid",
    "check_comodule",
    "coinvariants",
    "sparse_pairs",
]


def sparse_pairs(vec, d1, d2, field):
    """Nonzero entries of a tensor-square vector as (i, j, coeff)."""
    out = []
    for idx in np.nonzero(np.asarray(vec))[0]:
        c = field.canon(vec[idx])
        if c != field.zero:
            out.append((idx // d2, idx % d2, c))
    return out


class LeftBialgebroid:
    """A left bialgebroid on explicit k-bases of the base A and total U.

    ``s_map``/``t_map`` are dU x dA matrices, ``counit`` is dA x dU, and
    ``delta`` is the dU^2 x dU coproduct lift (or a thunk producing it,
    so that coproducts can stay unevaluated when not needed).
    """

    def __init__(self, base, total, s_map, t_map, delta, counit, name="U"):
        self.A = base
        self.U = total
        self.field = base.field
        self.s_map = self.field.mod(np.asarray(s_map))
        self.t_map = self.field.mod(np.asarray(t_map))
        self._delta = delta
        self.counit = self.field.mod(np.asarray(counit))
        self.name = name
        self._cache = {}

    # -- structure maps ----------------------------------------------------

    @property
    def delta(self):
        if callable(self._delta):
            self._delta = self.field.mod(np.asarray(self._delta()))
        return self._delta

    def s_of(self, a):
        return self.field.matmul(self.s_map, a)

    def t_of(self, a):
        return self.field.matmul(self.t_map, a)

    def eps(self, u):
        return self.field.matmul(self.counit, u)

    def delta_of(self, u):
        return self.field.matmul(self.delta, u)

    def act_on_base(self, u, a):
        """The action of U on its base, u(a) = eps(u s(a))."""
        return self.eps(self.U.mult(u, self.s_of(a)))

    @property
    def delta_sparse(self):
        if "dsp" not in self._cache:
            d = self.U.dim
            self._cache["dsp"] = [
                sparse_pairs(self.delta[:, i], d, d, self.field)
                for i in range(d)
            ]
        return self._cache["dsp"]

    # -- action matrices per A-basis index ----------------------------------

    def _mults(self, key, mat, mk):
        if key not in self._cache:
            self._cache[key] = [
                mk(self.field.mod(mat[:, i])) for i in range(self.A.dim)
            ]
        return self._cache[key]

    @property
    def Ls(self):
        return self._mults("Ls", self.s_map, self.U.left_mult)

    @property
    def Lt(self):
        return self._mults("Lt", self.t_map, self.U.left_mult)

    @property
    def Rs(self):
        return self._mults("Rs", self.s_map, self.U.right_mult)

    @property
    def Rt(self):
        return self._mults("Rt", self.t_map, self.U.right_mult)

    # -- balanced tensor squares --------------------------------------------

    @property
    def T0(self):
        if "T0" not in self._cache:
            d = self.U.dim
            self._cache["T0"] = balanced_tensor(self.field, d, self.Lt, d, self.Ls)
        return self._cache["T0"]

    @property
    def T1(self):
        if "T1" not in self._cache:
            d = self.U.dim
            self._cache["T1"] = balanced_tensor(self.field, d, self.Rt, d, self.Lt)
        return self._cache["T1"]

    @property
    def T2(self):
        if "T2" not in self._cache:
            d = self.U.dim
            self._cache["T2"] = balanced_tensor(self.field, d, self.Rs, d, self.Ls)
        return self._cache["T2"]

    def tensor_mult(self, x, y):
        """Product of two lifts in U (x) U (factorwise)."""
        d = self.U.dim
        f = self.field
        out = f.zeros(d * d)
        for k, l, c in sparse_pairs(x, d, d, f):
            for k2, l2, c2 in sparse_pairs(y, d, d, f):
                out = out + f.mul(c, c2) * kron_vec(
                    f, self.U.mul[k, k2], self.U.mul[l, l2]
                )
        return f.mod(out)

    # -- derived presentations ----------------------------------------------

    def coop(self):
        """The co-opposite left bialgebroid over A^op."""
        d = self.U.dim
        flip = (
            self.delta.reshape(d, d, d).swapaxes(0, 1).reshape(d * d, d)
        )
        return LeftBialgebroid(
            self.A.opposite(), self.U, self.t_map, self.s_map, flip,
            self.counit, name=self.name + "_coop",
        )

    def opposite(self):
        """The opposite right bialgebroid on U^op."""
        return RightBialgebroid(
            self.A, self.U.opposite(), self.t_map, self.s_map, self.delta,
            self.counit, name=self.name + "_op",
        )


class RightBialgebroid:
    """A right bialgebroid, stored as raw data plus the standard reduction
    to a left bialgebroid over the opposite algebras (op of the total,
    op of the base), through which all checks are routed.
    """

    def __init__(self, base, total, s_map, t_map, delta, counit, name="W"):
        self.A = base
        self.U = total
        self.field = base.field
        self.s_map = base.field.mod(np.asarray(s_map))
        self.t_map = base.field.mod(np.asarray(t_map))
        self._delta = delta
        self.counit = base.field.mod(np.asarray(counit))
        self.name = name

    @property
    def delta(self):
        if callable(self._delta):
            self._delta = self.field.mod(np.asarray(self._delta()))
        return self._delta

    def op_coop(self):
        """The associated left bialgebroid (U^op, A^op, s, t, flip o delta)."""
        d = self.U.dim
        def flipped():
            return self.delta.reshape(d, d, d).swapaxes(0, 1).reshape(d * d, d)
        return LeftBialgebroid(
            self.A.opposite(), self.U.opposite(), self.s_map, self.t_map,
            flipped, self.counit, name=self.name + "_opcoop",
        )


def check_left_bialgebroid(b, with_triples=True, name=None):
    """Full axiom battery for a left bialgebroid presentation.

    ``with_triples=False`` skips the coassociativity check, whose iterated
    triple quotient is the only expensive step on large total algebras.
    """
    rep = Report(name or b.name)
    f = b.field
    A, U = b.A, b.U
    for sub, pre in ((A.check(), "base."), (U.check(), "total.")):
        for item in sub.items:
            item.check_id = pre + item.check_id
        rep.items.extend(sub.items)

    one_a = A.unit
    rep.add("source.unit", f.equal(b.s_of(one_a), U.unit))
    rep.add("target.unit", f.equal(b.t_of(one_a), U.unit))

    ok_s = ok_t = ok_c = True
    for i in range(A.dim):
        for j in range(A.dim):
            ei, ej = A.basis(i), A.basis(j)
            si, sj = b.s_of(ei), b.s_of(ej)
            ti, tj = b.t_of(ei), b.t_of(ej)
            ok_s &= f.equal(U.mult(si, sj), b.s_of(A.mult(ei, ej)))
            ok_t &= f.equal(U.mult(ti, tj), b.t_of(A.mult(ej, ei)))
            ok_c &= f.equal(U.mult(si, tj), U.mult(tj, si))
    rep.add("source.morphism", ok_s)
    rep.add("target.antimorphism", ok_t)
    rep.add("source_target.commute", ok_c)

    rep.add("counit.unit", f.equal(b.eps(U.unit), one_a))

    ok = True
    for i in range(A.dim):
        for j in range(A.dim):
            for k in range(U.dim):
                u = U.basis(k)
                lhs = b.eps(U.mult(U.mult(b.s_of(A.basis(i)), b.t_of(A.basis(j))), u))
                rhs = A.mult(A.mult(A.basis(i), b.eps(u)), A.basis(j))
                ok &= f.equal(lhs, rhs)
    rep.add("counit.bimodule", ok)

    ok_src = ok_tgt = True
    for i in range(U.dim):
        for j in range(U.dim):
            u, v = U.basis(i), U.basis(j)
            e = b.eps(U.mult(u, v))
            ok_src &= f.equal(e, b.eps(U.mult(u, b.s_of(b.eps(v)))))
            ok_tgt &= f.equal(e, b.eps(U.mult(u, b.t_of(b.eps(v)))))
    rep.add("counit.product.source", ok_src)
    rep.add("counit.product.target", ok_tgt)

    t0 = b.T0
    d = U.dim
    rep.add(
        "coproduct.unit",
        np.array_equal(
            t0.project(b.delta_of(U.unit)), t0.project(kron_vec(f, U.unit, U.unit))
        ),
    )

    ok_l = ok_r = True
    for i in range(d):
        lhs_l = f.zeros(d)
        lhs_r = f.zeros(d)
        for k, l, c in b.delta_sparse[i]:
            lhs_l = lhs_l + c * U.mult(b.s_of(b.eps(U.basis(k))), U.basis(l))
            lhs_r = lhs_r + c * U.mult(b.t_of(b.eps(U.basis(l))), U.basis(k))
        ok_l &= f.equal(f.mod(lhs_l), U.basis(i))
        ok_r &= f.equal(f.mod(lhs_r), U.basis(i))
    rep.add("coproduct.counit.left", ok_l)
    rep.add("coproduct.counit.right", ok_r)

    ok = True
    for i in range(d):
        lift = b.delta_of(U.basis(i))
        for a in range(b.A.dim):
            v1 = apply_leg1(f, b.Rt[a], lift, d, d)
            v2 = apply_leg2(f, b.Rs[a], lift, d, d)
            if not f.is_zero(t0.project(f.mod(v1 - v2))):
                ok = False
    rep.add("coproduct.takeuchi", ok)

    ok = True
    witness = None
    for i in range(d):
        for j in range(d):
            lhs = b.delta_of(U.mult(U.basis(i), U.basis(j)))
            rhs = b.tensor_mult(b.delta_of(U.basis(i)), b.delta_of(U.basis(j)))
            if not np.array_equal(t0.project(lhs), t0.project(rhs)):
                ok = False
                witness = f"delta(e{i} e{j}) != delta(e{i}) delta(e{j})"
                break
        if not ok:
            break
    rep.add("coproduct.multiplicative", ok, witness)

    ok = True
    for a in range(b.A.dim):
        for i in range(d):
            u = U.basis(i)
            lift = b.delta_of(u)
            lhs = b.delta_of(f.matmul(b.Ls[a], u))
            if not np.array_equal(
                t0.project(lhs), t0.project(apply_leg1(f, b.Ls[a], lift, d, d))
            ):
                ok = False
            lhs = b.delta_of(f.matmul(b.Lt[a], u))
            if not np.array_equal(
                t0.project(lhs), t0.project(apply_leg2(f, b.Lt[a], lift, d, d))
            ):
                ok = False
    rep.add("coproduct.bimodule", ok)

    if with_triples:
        trip = TripleQuotient(
            f,
            (d, d, d),
            [(b.Lt[a], b.Ls[a]) for a in range(b.A.dim)],
            [(b.Lt[a], b.Ls[a]) for a in range(b.A.dim)],
        )
        ok = True
        for i in range(d):
            lhs = f.zeros(d * d * d)
            rhs = f.zeros(d * d * d)
            for k, l, c in b.delta_sparse[i]:
                lhs = lhs + c * kron_vec(f, b.delta_of(U.basis(k)), U.basis(l))
                rhs = rhs + c * kron_vec(f, U.basis(k), b.delta_of(U.basis(l)))
            if not np.array_equal(trip.project(f.mod(lhs)), trip.project(f.mod(rhs))):
                ok = False
                break
        rep.add("coproduct.coassociative", ok)
    else:
        rep.skip("coproduct.coassociative", "triple quotient skipped")
    return rep


def check_right_bialgebroid(w, with_triples=True):
    """Axiom battery for a right bialgebroid, via its left reduction."""
    return check_left_bialgebroid(w.op_coop(), with_triples=with_triples, name=w.name)


class ComodulePresentation:
    """A left or right comodule over a left bialgebroid.

    Left comodule: a left A-action (``action[a]`` per base index) and a
    coaction lift M -> U (x) M, compared in U_<| (x)_A M
    (relations t(a)u (x) m - u (x) a.m).

    Right comodule: a right A-action written on the left, and a coaction
    lift M -> M (x) |>U (relations m.a (x) u - m (x) s(a)u).
    """

    def __init__(self, b, side, action, coaction, name="M"):
        self.b = b
        self.side = side  # "left" | "right"
        self.field = b.field
        self.action = [b.field.mod(np.asarray(m)) for m in action]
        self.coaction = b.field.mod(np.asarray(coaction))
        self.dim = self.action[0].shape[0]
        self.name = name
        self._cache = {}

    @property
    def quotient(self):
        """The balanced tensor space the coaction lands in."""
        if "q" not in self._cache:
            b, f, d = self.b, self.field, self.dim
            if self.side == "left":
                self._cache["q"] = balanced_tensor(
                    f, b.U.dim, b.Lt, d, self.action
                )
            else:
                self._cache["q"] = balanced_tensor(
                    f, d, self.action, b.U.dim, b.Ls
                )
        return self._cache["q"]

    @property
    def induced_action(self):
        """The induced action on the other side.

        For a left comodule: m.a = eps(m_(-1) s(a)) . m_0, a right action.
        For a right comodule: a.m = m_0 . eps(m_1 t(a)), a left action.
        """
        if "ind" not in self._cache:
            b, f, d = self.b, self.field, self.dim
            du = b.U.dim
            mats = []
            for a in range(b.A.dim):
                m = f.zeros((d, d))
                for j in range(d):
                    col = f.zeros(d)
                    lift = f.mod(self.coaction[:, j])
                    if self.side == "left":
                        for k, i, c in sparse_pairs(lift, du, d, f):
                            coeff = b.eps(b.U.mult(b.U.basis(k), b.s_of(b.A.basis(a))))
                            col = col + c * sum_action(f, self.action, coeff)[:, i]
                    else:
                        for i, k, c in sparse_pairs(lift, d, du, f):
                            coeff = b.eps(b.U.mult(b.U.basis(k), b.t_of(b.A.basis(a))))
                            col = col + c * sum_action(f, self.action, coeff)[:, i]
                    m[:, j] = f.mod(col)
                mats.append(m)
            self._cache["ind"] = mats
        return self._cache["ind"]

    def coact(self, m):
        return self.field.matmul(self.coaction, m)


def check_comodule(com, name=None):
    """Counitality, coassociativity, A-linearity and the image condition
    for a comodule presentation."""
    b = com.b
    f = com.field
    rep = Report(name or f"{com.name} ({com.side} comodule)")
    d, du = com.dim, b.U.dim

    contra = com.side == "right"
    rep.extend(check_action(b.A, com.action, contravariant=contra, name="a"))
    for item in rep.items[-2:]:
        item.check_id = "comodule." + item.check_id

    q = com.quotient

    ok = True
    for a in range(b.A.dim):
        for j in range(d):
            m = f.zeros(d)
            m[j] = f.one
            lhs = com.coact(f.matmul(com.action[a], m))
            if com.side == "left":
                rhs = apply_leg1(f, b.Ls[a], com.coact(m), du, d)
            else:
                rhs = apply_leg2(f, b.Lt[a], com.coact(m), d, du)
            if not np.array_equal(q.project(lhs), q.project(rhs)):
                ok = False
    rep.add("comodule.coaction.linear", ok)

    ok = True
    for j in range(d):
        lift = f.mod(com.coaction[:, j])
        out = f.zeros(d)
        if com.side == "left":
            for k, i, c in sparse_pairs(lift, du, d, f):
                out = out + c * sum_action(f, com.action, b.eps(b.U.basis(k)))[:, i]
        else:
            for i, k, c in sparse_pairs(lift, d, du, f):
                out = out + c * sum_action(f, com.action, b.eps(b.U.basis(k)))[:, i]
        m = f.zeros(d)
        m[j] = f.one
        ok &= f.equal(f.mod(out), m)
    rep.add("comodule.counit", ok)

    if com.side == "left":
        trip = TripleQuotient(
            f,
            (du, du, d),
            [(b.Lt[a], b.Ls[a]) for a in range(b.A.dim)],
            [(b.Lt[a], com.action[a]) for a in range(b.A.dim)],
        )
    else:
        trip = TripleQuotient(
            f,
            (d, du, du),
            [(com.action[a], b.Ls[a]) for a in range(b.A.dim)],
            [(b.Lt[a], b.Ls[a]) for a in range(b.A.dim)],
        )
    ok = True
    for j in range(d):
        lift = f.mod(com.coaction[:, j])
        lhs = f.zeros(du * du * d) if com.side == "left" else f.zeros(d * du * du)
        rhs = lhs.copy()
        if com.side == "left":
            for k, i, c in sparse_pairs(lift, du, d, f):
                lhs = lhs + c * kron_vec(f, b.delta_of(b.U.basis(k)), _unitvec(f, d, i))
                rhs = rhs + c * kron_vec(f, _unitvec(f, du, k), f.mod(com.coaction[:, i]))
        else:
            for i, k, c in sparse_pairs(lift, d, du, f):
                lhs = lhs + c * kron_vec(f, f.mod(com.coaction[:, i]), _unitvec(f, du, k))
                rhs = rhs + c * kron_vec(f, _unitvec(f, d, i), b.delta_of(b.U.basis(k)))
        if not np.array_equal(trip.project(f.mod(lhs)), trip.project(f.mod(rhs))):
            ok = False
    rep.add("comodule.coassociative", ok)

    ind = com.induced_action
    rep.extend(
        check_action(b.A, ind, contravariant=not contra, name="a")
    )
    for item in rep.items[-2:]:
        item.check_id = "comodule.induced_" + item.check_id

    ok = True
    for a in range(b.A.dim):
        for j in range(d):
            lift = f.mod(com.coaction[:, j])
            if com.side == "left":
                v1 = apply_leg1(f, b.Rt[a], lift, du, d)
                v2 = apply_leg2(f, ind[a], lift, du, d)
            else:
                v1 = apply_leg2(f, b.Rs[a], lift, d, du)
                v2 = apply_leg1(f, ind[a], lift, d, du)
            if not f.is_zero(q.project(f.mod(v1 - v2))):
                ok = False
    rep.add("comodule.image", ok)
    return rep


def _unitvec(f, n, i):
    v = f.zeros(n)
    v[i] = f.one
    return v


def coinvariants(com):
    """Basis of the coinvariant subspace {m : coaction(m) = unit (x) m}."""
    b, f, d = com.b, com.field, com.dim
    du = b.U.dim
    if com.side == "left":
        triv = np.kron(b.U.unit.reshape(du, 1), f.eye(d))
    else:
        triv = np.kron(f.eye(d), b.U.unit.reshape(du, 1))
    diff = f.mod(com.coaction - triv)
    q = com.quotient
    return kernel_basis(f, f.matmul(q.project_mat, diff))
