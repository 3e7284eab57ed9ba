"""Small worked examples used by the test suite and the CLI presets."""

import numpy as np

from .algebra import AlgebraPresentation
from .bialgebroid import ComodulePresentation, LeftBialgebroid
from .lie_rinehart import RestrictedLieRinehart, crossed_product, restricted_enveloping
from .linalg import Field

__all__ = [
    "base_trivial",
    "primitive_f2",
    "group_f3",
    "monoid_non_hopf",
    "truncated_polynomials",
    "rank1_dual_numbers_lr",
    "rank_n_truncated_lr",
    "abelian_lr",
    "crossed_rank2_lr",
    "rank1_dual_numbers",
    "rank_n_truncated",
    "abelian_n",
    "crossed_rank2",
    "FIXTURES",
    "LR_FIXTURES",
]


def _scalar_field_algebra(field):
    return AlgebraPresentation.from_triples(field, 1, [(0, 0, 0, 1)], [1], ["1"])


def base_trivial(p=2):
    """U = A = F_p[t]/(t^p) with s = t = id and delta(u) = u (x) 1.

    Every structure map is induced by the base algebra itself; the two
    tensor-quotient legs collapse to A.
    """
    f = Field.prime(p)
    triples = []
    for i in range(p):
        for j in range(p):
            if i + j < p:
                triples.append((i, j, i + j, 1))
    a = AlgebraPresentation.from_triples(
        f, p, triples, [1] + [0] * (p - 1), [f"t^{i}" if i else "1" for i in range(p)]
    )
    d = p
    delta = f.zeros((d * d, d))
    for i in range(d):
        delta[i * d + 0, i] = f.one
    return LeftBialgebroid(a, a, f.eye(d), f.eye(d), delta, f.eye(d), name="base-trivial")


def primitive_f2():
    """U = F_2[X]/(X^2) over A = F_2, X primitive."""
    f = Field.prime(2)
    a = _scalar_field_algebra(f)
    u = AlgebraPresentation.from_triples(
        f, 2, [(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)], [1, 0], ["1", "X"]
    )
    s = f.array([[1], [0]])
    delta = f.zeros((4, 2))
    delta[0, 0] = 1  # delta(1) = 1 (x) 1
    delta[1, 1] = 1  # delta(X) = 1 (x) X + X (x) 1
    delta[2, 1] = 1
    counit = f.array([[1, 0]])
    return LeftBialgebroid(a, u, s, s, delta, counit, name="primitive-f2")


def group_f3():
    """Group algebra F_3[Z/2], g grouplike."""
    f = Field.prime(3)
    a = _scalar_field_algebra(f)
    u = AlgebraPresentation.from_triples(
        f, 2, [(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, 1)], [1, 0], ["1", "g"]
    )
    s = f.array([[1], [0]])
    delta = f.zeros((4, 2))
    delta[0, 0] = 1
    delta[3, 1] = 1  # delta(g) = g (x) g
    counit = f.array([[1, 1]])
    return LeftBialgebroid(a, u, s, s, delta, counit, name="group-f3")


def monoid_non_hopf():
    """Monoid algebra F_2[{1, e}] with e^2 = e, e grouplike-like but not
    invertible; a bialgebra whose Hopf-Galois maps are not bijective."""
    f = Field.prime(2)
    a = _scalar_field_algebra(f)
    u = AlgebraPresentation.from_triples(
        f, 2, [(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 1, 1)], [1, 0], ["1", "e"]
    )
    s = f.array([[1], [0]])
    delta = f.zeros((4, 2))
    delta[0, 0] = 1
    delta[3, 1] = 1
    counit = f.array([[1, 1]])
    return LeftBialgebroid(a, u, s, s, delta, counit, name="monoid-non-hopf")


def regular_comodule(b, side):
    """U itself as a comodule over itself via the coproduct."""
    if side == "left":
        action = b.Ls  # a |> u = s(a) u
    else:
        action = b.Lt  # u <| a = t(a) u, a right action written on the left
    return ComodulePresentation(b, side, action, b.delta, name=f"{b.name}-regular")


def trivial_comodule(b, side):
    """The base A with coaction a -> 1 (x) a (resp. a (x) 1)."""
    f = b.field
    d = b.A.dim
    du = b.U.dim
    if side == "left":
        action = b.A.basis_left_mults
        co = np.kron(b.U.unit.reshape(du, 1), f.eye(d))
    else:
        action = b.A.basis_right_mults
        co = np.kron(f.eye(d), b.U.unit.reshape(du, 1))
    return ComodulePresentation(b, side, action, f.mod(co), name=f"{b.name}-base")


def truncated_polynomials(p):
    """A = F_p[t]/(t^p) with its derivation d/dt."""
    f = Field.prime(p)
    triples = [(i, j, i + j, 1) for i in range(p) for j in range(p) if i + j < p]
    a = AlgebraPresentation.from_triples(
        f, p, triples, [1] + [0] * (p - 1), [f"t^{i}" if i else "1" for i in range(p)]
    )
    ddt = f.zeros((p, p))
    for i in range(1, p):
        ddt[i - 1, i] = i % p
    return a, ddt


def rank1_dual_numbers_lr(p=2):
    """L = A d/dt over A = F_p[t]/(t^p), with d/dt^[p] = 0."""
    a, ddt = truncated_polynomials(p)
    f = a.field
    return RestrictedLieRinehart(
        a, 1, f.zeros((1, 1, 1, p)), [ddt], f.zeros((1, 1, p)),
        name=f"dual-numbers-p{p}",
    )


def rank_n_truncated_lr(p, n):
    """Free rank-n abelian L over F_p[t]/(t^p); only the first generator
    carries the derivation d/dt, all p-operations vanish."""
    a, ddt = truncated_polynomials(p)
    f = a.field
    anchors = [ddt] + [f.zeros((p, p)) for _ in range(n - 1)]
    return RestrictedLieRinehart(
        a, n, f.zeros((n, n, n, p)), anchors, f.zeros((n, n, p)),
        name=f"rank{n}-truncated-p{p}",
    )


def abelian_lr(p, n):
    """Abelian rank-n restricted Lie algebra over A = F_p (trivial anchor)."""
    f = Field.prime(p)
    a = _scalar_field_algebra(f)
    return RestrictedLieRinehart(
        a, n, f.zeros((n, n, n, 1)), [f.zeros((1, 1))] * n, f.zeros((n, n, 1)),
        name=f"abelian{n}-p{p}",
    )


def crossed_rank2_lr():
    """Crossed product A (x) g for A = F_2[t]/(t^2) and g 2-dimensional
    abelian restricted, acting by sigma(X1) = d/dt, sigma(X2) = 0, with
    X1^[2] = 0 and X2^[2] = X2."""
    a, ddt = truncated_polynomials(2)
    f = a.field
    zero = [[0, 0], [0, 0]]
    g_bracket = [[zero[0], zero[0]], [zero[0], zero[0]]]
    g_bracket = [[[0, 0], [0, 0]], [[0, 0], [0, 0]]]
    g_pops = [[0, 0], [0, 1]]
    sigma = [ddt, f.zeros((2, 2))]
    return crossed_product(a, 2, g_bracket, g_pops, sigma, name="crossed-p2")


def rank1_dual_numbers(p=2):
    return restricted_enveloping(rank1_dual_numbers_lr(p))


def rank_n_truncated(p, n):
    return restricted_enveloping(rank_n_truncated_lr(p, n))


def abelian_n(p=2, n=2):
    return restricted_enveloping(abelian_lr(p, n))


def crossed_rank2():
    return restricted_enveloping(crossed_rank2_lr())


FIXTURES = {
    "base-trivial": base_trivial,
    "primitive-f2": primitive_f2,
    "group-f3": group_f3,
    "monoid-non-hopf": monoid_non_hopf,
    "rank1-dual-numbers": rank1_dual_numbers,
    "rank1-dual-numbers-p3": lambda: rank1_dual_numbers(3),
    "abelian-n": abelian_n,
    "crossed": crossed_rank2,
}

LR_FIXTURES = {
    "rank1-dual-numbers": lambda: rank1_dual_numbers_lr(2),
    "rank1-dual-numbers-p3": lambda: rank1_dual_numbers_lr(3),
    "abelian-n": lambda: abelian_lr(2, 2),
    "crossed": crossed_rank2_lr,
}
