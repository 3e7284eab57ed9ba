"""Mixed module/comodule structures and their structure theorems."""

import numpy as np

from .algebra import balanced_tensor, check_action, sum_action
from .bialgebroid import ComodulePresentation, check_comodule, coinvariants
from .duals import dual_action, left_dual, right_dual, s_lower_star, s_upper_star
from .hopf import comodule_is_bijective, comodule_translate_mat
from .linalg import rank, solve_affine
from .report import Report


class HopfModulePresentation:
    """A U-module that is simultaneously a left U-comodule.

    kind "LL": left U-action (``action[i]`` is multiplication by the i-th
    total basis vector), law u_(1) m_(-1) (x) u_(2) m_(0) = coact(u m).
    kind "RL": right U-action written on the left (contravariant family),
    law m_(-1) u_(1) (x) m_(0) u_(2) = coact(m u).
    """

    def __init__(self, b, kind, action, comodule, name="M"):
        self.b = b
        self.kind = kind
        self.field = b.field
        self.action = [b.field.mod(np.asarray(m)) for m in action]
        self.comodule = comodule
        self.dim = self.action[0].shape[0]
        self.name = name

    def act(self, u):
        return sum_action(self.field, self.action, u)


def check_hopf_module(mod, name=None):
    b, f = mod.b, mod.field
    rep = Report(name or f"{mod.name} ({mod.kind}) Hopf module")
    rep.extend(
        check_action(
            b.U, mod.action, contravariant=(mod.kind == "RL"), name="module"
        )
    )
    rep.extend(check_comodule(mod.comodule, name=mod.comodule.name))
    com = mod.comodule
    d, dm = b.U.dim, mod.dim
    q = com.quotient
    if mod.kind == "LL":
        ok = all(
            f.equal(com.action[a], mod.act(b.s_of(b.A.basis(a))))
            for a in range(b.A.dim)
        )
        rep.add("hopf-module.base-action", ok)
    else:
        # the induced right action m.a agrees with acting by s(a)
        ind = com.induced_action
        ok = all(
            f.equal(ind[a], mod.act(b.s_of(b.A.basis(a))))
            for a in range(b.A.dim)
        )
        rep.add("hopf-module.base-action", ok)
    law = True
    wit = None
    for i in range(d):
        pairs = b.delta_sparse[i]
        lhs_mat = f.zeros((d * dm, dm))
        for k, l, c in pairs:
            if mod.kind == "LL":
                op1 = b.U.basis_left_mults[k]
            else:
                op1 = b.U.basis_right_mults[k]
            term = f.matmul(
                np.kron(op1, mod.action[l]), com.coaction
            )
            lhs_mat = lhs_mat + c * term
        rhs_mat = f.matmul(com.coaction, mod.action[i])
        diff = f.matmul(q.project_mat, f.mod(lhs_mat - rhs_mat))
        if not f.is_zero(f.mod(diff)):
            law = False
            wit = b.U.labels[i]
            break
    rep.add("hopf-module.compatibility", law, witness=wit)
    return rep


# -- standard examples ------------------------------------------------------


def _coaction_on_quotient(b, q, dn):
    """Coaction matrix for quotients of U (x) N, v (x) n -> v_(1) (x) (v_(2) (x) n)."""
    f, d = b.field, b.U.dim
    amb = np.kron(b.delta, f.eye(dn))
    return f.matmul(
        np.kron(f.eye(d), q.project_mat), f.matmul(amb, q.section_mat)
    )


def rl_hopf_module_from_base_module(b, action_a, name="U(x)N"):
    """U_<| (x)_A N for a left A-module N: right action (v (x) n).u = vu (x) n,
    coaction v_(1) (x) v_(2) (x) n."""
    f, d = b.field, b.U.dim
    dn = action_a[0].shape[0]
    q = balanced_tensor(f, d, b.Lt, dn, action_a)
    act = [
        q.induced_op(np.kron(b.U.basis_right_mults[i], f.eye(dn)))
        for i in range(d)
    ]
    a_act = [q.induced_op(np.kron(b.Ls[a], f.eye(dn))) for a in range(b.A.dim)]
    com = ComodulePresentation(
        b, "left", a_act, _coaction_on_quotient(b, q, dn), name=name
    )
    return HopfModulePresentation(b, "RL", act, com, name=name)


def ll_hopf_module_from_base_module(b, action_a, name="U(x)P"):
    """|>U (x)_{Aop} P for a right A-module P (written on the left):
    left action u.(v (x) x) = uv (x) x, coaction v_(1) (x) v_(2) (x) x."""
    f, d = b.field, b.U.dim
    dn = action_a[0].shape[0]
    q = balanced_tensor(f, d, b.Rt, dn, action_a)
    act = [
        q.induced_op(np.kron(b.U.basis_left_mults[i], f.eye(dn)))
        for i in range(d)
    ]
    a_act = [q.induced_op(np.kron(b.Ls[a], f.eye(dn))) for a in range(b.A.dim)]
    com = ComodulePresentation(
        b, "left", a_act, _coaction_on_quotient(b, q, dn), name=name
    )
    return HopfModulePresentation(b, "LL", act, com, name=name)


def ll_hopf_module_from_module(b, action_u, name="U(x)N2"):
    """U_<| (x)_A N for a left U-module N: diagonal action
    u.(v (x) n) = u_(1)v (x) u_(2)n, coaction v_(1) (x) v_(2) (x) n."""
    f, d = b.field, b.U.dim
    dn = action_u[0].shape[0]
    act_s = [sum_action(f, action_u, b.s_map[:, a]) for a in range(b.A.dim)]
    q = balanced_tensor(f, d, b.Lt, dn, act_s)
    act = []
    for i in range(d):
        amb = f.zeros((d * dn, d * dn))
        for k, l, c in b.delta_sparse[i]:
            amb = amb + c * np.kron(b.U.basis_left_mults[k], action_u[l])
        act.append(q.induced_op(f.mod(amb)))
    a_act = [q.induced_op(np.kron(b.Ls[a], f.eye(dn))) for a in range(b.A.dim)]
    com = ComodulePresentation(
        b, "left", a_act, _coaction_on_quotient(b, q, dn), name=name
    )
    return HopfModulePresentation(b, "LL", act, com, name=name)


def comparison_map(b, action_u):
    """The map |>U (x)_{Aop} N_<| -> U_<| (x)_A N, u (x) n -> u_(1) (x) u_(2)n
    between the two standard structures on a left U-module N.
    Returns (matrix, invertible)."""
    f, d = b.field, b.U.dim
    dn = action_u[0].shape[0]
    act_t = [sum_action(f, action_u, b.t_map[:, a]) for a in range(b.A.dim)]
    act_s = [sum_action(f, action_u, b.s_map[:, a]) for a in range(b.A.dim)]
    dom = balanced_tensor(f, d, b.Rt, dn, act_t)
    cod = balanced_tensor(f, d, b.Lt, dn, act_s)
    amb = f.zeros((d * dn, d * dn))
    for i in range(d):
        for k, l, c in b.delta_sparse[i]:
            col = action_u[l]
            for j in range(dn):
                amb[:, i * dn + j] += c * np.kron(_unit(f, d, k), col[:, j])
    amb = f.mod(amb)
    for r in range(dom.rel.rows.shape[0]):
        if not cod.rel.contains(f.matmul(amb, dom.rel.rows[r])):
            raise ValueError("comparison map does not descend")
    m = f.matmul(f.matmul(cod.project_mat, amb), dom.section_mat)
    inv = m.shape[0] == m.shape[1] and rank(f, m) == m.shape[0]
    return m, bool(inv)


def _unit(f, n, i):
    v = f.zeros(n)
    v[i] = f.one
    return v


def _dual_basis_of_target_module(b):
    """Functionals e_i^* with sum_i t(<e_i^*, u>) e_i = u, pairing the
    total k-basis against t-side linear functionals."""
    if "dual_basis" in b._cache:
        return b._cache["dual_basis"]
    f, d = b.field, b.U.dim
    up = right_dual(b)
    ds = up.dim
    cols = []
    for i in range(d):
        for k in range(ds):
            vec = f.zeros(d * d)
            for j in range(d):
                a = up.funcs[k][:, j]
                vec[j * d : (j + 1) * d] += sum_action(f, b.Lt, a)[:, i]
            cols.append(f.mod(vec))
    mat = np.stack(cols, axis=1)
    rhs = f.eye(d).reshape(d * d)
    sol = solve_affine(f, mat, rhs)
    if sol is None:
        raise ValueError("total algebra is not free over t(A)")
    x = sol[0]
    estars = [f.mod(x[i * ds : (i + 1) * ds]) for i in range(d)]
    b._cache["dual_basis"] = estars
    return estars


def build_u_star_hopf_module(b):
    """The t-side dual as a left-left Hopf module: action through the left
    translation, coaction phi -> sum_i e_i (x) phi e_i^*."""
    f, d = b.field, b.U.dim
    up = right_dual(b)
    ds = up.dim
    estars = _dual_basis_of_target_module(b)
    act = dual_action(b, up, "bullet")
    coact = f.zeros((d * ds, ds))
    for m in range(ds):
        em = _unit(f, ds, m)
        for i in range(d):
            prod = up.U.mult(em, estars[i])
            coact[:, m] += np.kron(_unit(f, d, i), prod)
    coact = f.mod(coact)
    a_act = [up.U.right_mult(up.t_map[:, a]) for a in range(b.A.dim)]
    com = ComodulePresentation(b, "left", a_act, coact, name="U^*")
    return HopfModulePresentation(b, "LL", act, com, name="U^*")


def build_u_lower_star_hopf_module(b):
    """The s-side dual as a left-left Hopf module, transported from the
    t-side structure along the antipode-like pairing isomorphism."""
    f, d = b.field, b.U.dim
    star = build_u_star_hopf_module(b)
    smat = s_upper_star(b)
    sinv = s_lower_star(b)
    lo = left_dual(b)
    act = dual_action(b, lo, "harpoon")
    coact = f.matmul(
        np.kron(f.eye(d), smat), f.matmul(star.comodule.coaction, sinv)
    )
    a_act = [
        f.matmul(smat, f.matmul(m, sinv)) for m in star.comodule.action
    ]
    com = ComodulePresentation(b, "left", a_act, coact, name="U_*")
    return HopfModulePresentation(b, "LL", act, com, name="U_*")


# -- structure theorems ------------------------------------------------------


def _cov_data(mod, twist):
    """Coinvariants with the A-action a.m = act(map(a)) restricted to them."""
    f = mod.field
    cov = coinvariants(mod.comodule)
    c = len(cov)
    if c == 0:
        return f.zeros((mod.dim, 0)), []
    covmat = np.stack(cov, axis=1)
    acts = []
    for a in range(mod.b.A.dim):
        big = mod.act(twist[:, a])
        cols = []
        for r in range(c):
            sol = solve_affine(f, covmat, f.matmul(big, covmat[:, r]))
            if sol is None:
                raise ValueError("coinvariants not closed under the A-action")
            cols.append(sol[0])
        acts.append(np.stack(cols, axis=1))
    return covmat, acts


def fundamental_rl(b, mod):
    """Inverse isomorphisms between U_<| (x) M^cov and M for a right-left
    Hopf module with bijective comodule Hopf-Galois map.
    Returns (gamma, eta, verified)."""
    if mod.kind != "RL":
        raise ValueError("expected an RL Hopf module")
    f, d, dm = mod.field, b.U.dim, mod.dim
    com = mod.comodule
    if not comodule_is_bijective(com):
        raise ValueError("comodule Hopf-Galois map is not bijective")
    trans = comodule_translate_mat(com)  # m -> m^[+] (x) m^[-] in M (x) U
    mu = f.zeros((dm, dm * d))
    for j in range(dm):
        for i in range(d):
            mu[:, j * d + i] = mod.action[i][:, j]
    kmat = f.matmul(mu, trans)  # m -> m^[+] m^[-]
    covmat, acts = _cov_data(mod, b.t_map)
    c = covmat.shape[1]
    ok = True
    kc = f.zeros((c, dm))
    for j in range(dm):
        sol = solve_affine(f, covmat, kmat[:, j])
        if sol is None:
            ok = False
            break
        kc[:, j] = sol[0]
    if not ok:
        return None, None, False
    dom = balanced_tensor(f, d, b.Lt, c, acts)
    gamma_amb = f.zeros((dm, d * c))
    for i in range(d):
        for r in range(c):
            gamma_amb[:, i * c + r] = f.matmul(mod.action[i], covmat[:, r])
    for r in range(dom.rel.rows.shape[0]):
        if not f.is_zero(f.matmul(gamma_amb, dom.rel.rows[r])):
            return None, None, False
    gamma = f.matmul(gamma_amb, dom.section_mat)
    eta = f.matmul(
        dom.project_mat, f.matmul(np.kron(f.eye(d), kc), com.coaction)
    )
    verified = f.equal(f.matmul(gamma, eta), f.eye(dm)) and f.equal(
        f.matmul(eta, gamma), f.eye(dom.dim)
    )
    return gamma, eta, bool(verified)


def fundamental_ll(b, mod):
    """The evaluation |>U (x)_{Aop} M^cov -> M, u (x) m -> u.m, for a
    left-left Hopf module.  Returns (gamma, iso)."""
    if mod.kind != "LL":
        raise ValueError("expected an LL Hopf module")
    f, d, dm = mod.field, b.U.dim, mod.dim
    covmat, acts = _cov_data(mod, b.t_map)
    c = covmat.shape[1]
    dom = balanced_tensor(f, d, b.Rt, c, acts)
    gamma_amb = f.zeros((dm, d * c))
    for i in range(d):
        for r in range(c):
            gamma_amb[:, i * c + r] = f.matmul(mod.action[i], covmat[:, r])
    for r in range(dom.rel.rows.shape[0]):
        if not f.is_zero(f.matmul(gamma_amb, dom.rel.rows[r])):
            return None, False
    gamma = f.matmul(gamma_amb, dom.section_mat)
    iso = gamma.shape[0] == gamma.shape[1] and rank(f, gamma) == dm
    return gamma, bool(iso)
