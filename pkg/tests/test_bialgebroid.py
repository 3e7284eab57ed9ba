import numpy as np
import pytest

from bgd.bialgebroid import (
    LeftBialgebroid,
    check_comodule,
    check_left_bialgebroid,
    coinvariants,
)
from bgd.fixtures import FIXTURES, regular_comodule, trivial_comodule

SMALL = ["base-trivial", "primitive-f2", "group-f3", "monoid-non-hopf"]


@pytest.mark.parametrize("name", list(FIXTURES))
def test_axiom_battery(name):
    b = FIXTURES[name]()
    rep = check_left_bialgebroid(b, with_triples=b.U.dim <= 9)
    assert rep.ok, [i.check_id for i in rep.failures]


@pytest.mark.parametrize("name", SMALL)
def test_coop_battery(name):
    b = FIXTURES[name]().coop()
    assert check_left_bialgebroid(b).ok


def test_corrupted_coproduct_fails_with_witness():
    b = FIXTURES["primitive-f2"]()
    delta = b.field.mod(np.array(b.delta))
    delta[0, 1] = b.field.one  # make delta(X) non-counital
    bad = LeftBialgebroid(b.A, b.U, b.s_map, b.t_map, delta, b.counit)
    rep = check_left_bialgebroid(bad)
    assert not rep.ok
    assert any(i.witness for i in rep.failures)


def test_corrupted_target_fails():
    b = FIXTURES["group-f3"]()
    bad = LeftBialgebroid(b.A, b.U, b.s_map, b.field.mod(b.t_map * 2),
                          b.delta, b.counit)
    assert not check_left_bialgebroid(bad).ok


@pytest.mark.parametrize("name", SMALL)
@pytest.mark.parametrize("side", ["left", "right"])
def test_regular_and_trivial_comodules(name, side):
    b = FIXTURES[name]()
    assert check_comodule(regular_comodule(b, side)).ok
    assert check_comodule(trivial_comodule(b, side)).ok


def test_comodule_broken_coaction_fails():
    b = FIXTURES["primitive-f2"]()
    com = regular_comodule(b, "left")
    com.coaction = b.field.mod(com.coaction + 0)
    com.coaction[0, 1] += b.field.one
    com._cache.clear()
    assert not check_comodule(com).ok


@pytest.mark.parametrize("name", SMALL)
def test_regular_coinvariants_are_source_image(name):
    # coinvariants of U under its coproduct = s(A)
    b = FIXTURES[name]()
    cov = coinvariants(regular_comodule(b, "left"))
    f = b.field
    span = np.stack(cov, axis=1)
    assert len(cov) == b.A.dim
    from bgd.linalg import solve_affine

    for a in range(b.A.dim):
        assert solve_affine(f, span, b.s_of(b.A.basis(a))) is not None


def test_trivial_comodule_coinvariants_everything():
    b = FIXTURES["group-f3"]()
    cov = coinvariants(trivial_comodule(b, "left"))
    assert len(cov) == b.A.dim
