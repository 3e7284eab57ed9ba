import numpy as np
import pytest

from bgd.fixtures import FIXTURES
from bgd.frobenius import (
    frobenius_conditions_report,
    frobenius_system,
    quasi_frobenius_check,
)
from bgd.integrals import left_integrals

HOPF = [
    "base-trivial", "primitive-f2", "group-f3",
    "rank1-dual-numbers", "rank1-dual-numbers-p3", "abelian-n", "crossed",
]


@pytest.mark.parametrize("name", HOPF)
@pytest.mark.parametrize("extension", ["via_s", "via_t"])
def test_frobenius_system_exists_and_verifies(name, extension):
    b = FIXTURES[name]()
    sys = frobenius_system(b, extension=extension)
    assert sys is not None
    assert sys.verify(b)


def test_explicit_square_zero_system():
    b = FIXTURES["primitive-f2"]()
    f = b.field
    sys = frobenius_system(b)
    # generator of the integrals, the functional dual to it, and the
    # separating tensor X (x) 1 + 1 (x) X
    assert list(f.mod(sys.t0)) == [0, 1]
    assert sys.theta.tolist() == [[0, 1]]
    tensor = f.zeros(4)
    for x, y in sys.pairs:
        tensor = f.mod(tensor + np.kron(f.mod(x), f.mod(y)))
    assert list(tensor) == [0, 1, 1, 0]


@pytest.mark.parametrize("name", HOPF)
def test_system_generator_spans_integrals(name):
    b = FIXTURES[name]()
    sys = frobenius_system(b)
    sp = left_integrals(b)
    assert sp.contains(sys.t0)
    # t0 generates: its base-action orbit spans the whole integral space
    f = b.field
    orbit = np.stack([f.matmul(m, sys.t0) for m in b.Rt], axis=1)
    for v in sp.basis:
        from bgd.linalg import solve_affine
        assert solve_affine(f, orbit, v) is not None


@pytest.mark.parametrize("name", HOPF)
def test_conditions_battery_all_true(name):
    b = FIXTURES[name]()
    rep = frobenius_conditions_report(b)
    assert rep.ok, rep.failures


def test_conditions_disagree_outside_hopf_hypotheses():
    # the idempotent-monoid fixture is Frobenius as an algebra, but the
    # coproduct-pairing criteria need the translation maps, so the battery
    # honestly reports the disagreement instead of pretending equivalence
    b = FIXTURES["monoid-non-hopf"]()
    sys = frobenius_system(b)
    assert sys is not None and sys.verify(b)
    rep = frobenius_conditions_report(b)
    by_id = {i.check_id: i.status for i in rep.items}
    assert by_id["frobenius.integrals-free-rank-one"] == "pass"
    assert by_id["frobenius.conditions-agree"] == "fail"


@pytest.mark.parametrize("name", HOPF)
def test_system_matches_conditions(name):
    b = FIXTURES[name]()
    sys = frobenius_system(b)
    rep = frobenius_conditions_report(b)
    assert (sys is not None) == rep.ok


@pytest.mark.parametrize("name", HOPF + ["monoid-non-hopf"])
def test_quasi_frobenius(name):
    b = FIXTURES[name]()
    rep = quasi_frobenius_check(b)
    assert rep.ok, rep.failures


def test_quasi_frobenius_degenerate_space():
    # quotient with zero integral space: report skips instead of failing
    b = FIXTURES["primitive-f2"]()
    sp = left_integrals(b)
    assert sp.dim == 1  # sanity: this fixture is not the degenerate case
    rep = quasi_frobenius_check(b)
    ids = [i.check_id for i in rep.items]
    assert "quasi-frobenius.projective-integrals" in ids
