from itertools import combinations_with_replacement

import pytest
from hypothesis import given, strategies as st

from weiduality.anchors import anchor_for
from weiduality.algebra import BilinearForm, RingSpec, SubspaceLattice
from weiduality.errors import HypothesisViolation, InputError
from weiduality.fuzz import central_instance, random_bridge_tuple, CENTRAL_MODES
from weiduality.galois import (
    BridgeTuple,
    GaloisPair,
    MonotoneTable,
    abundance_bridge_check,
    adjoint_of,
    bridge_derive,
    bridge_report,
    central_statements,
    central_theorem_report,
    check_galois_pair,
    dual_connection,
    fiber_of,
    residue_sets,
    step_equivalences,
)
from weiduality.rng import SplitMix64

REP = GaloisPair.from_tables((0, 3), (0, 0, 0, 1))


def monotone_tables(length, top):
    for combo in combinations_with_replacement(range(top + 1), length):
        yield tuple(combo)


@st.composite
def profiles(draw, max_m=6, max_w=3):
    """(psi, w) with psi(0) = 0 and steps in [0, w]."""
    w = draw(st.integers(1, max_w))
    steps = draw(st.lists(st.integers(0, w), max_size=max_m))
    psi = [0]
    for s in steps:
        psi.append(psi[-1] + s)
    return psi, w


def test_check_galois_pair_examples():
    ident = (0, 1, 2, 3)
    assert check_galois_pair(ident, ident)
    assert check_galois_pair((0, 3), (0, 0, 0, 1))
    assert not check_galois_pair((3, 0), (0, 0, 0, 1))
    with pytest.raises(InputError):
        check_galois_pair(MonotoneTable((0, 3), 3), MonotoneTable((0, 1), 1))


def test_adjoint_examples():
    assert list(adjoint_of(MonotoneTable((0, 0, 0, 1), 1), "right")) == [0, 3]
    assert list(adjoint_of(MonotoneTable((0, 1, 2, 3), 3), "left")) == [0, 1, 2, 3]
    with pytest.raises(HypothesisViolation):
        adjoint_of(MonotoneTable((0, 0, 0, 0), 1), "right")


@pytest.mark.parametrize("k,m", [(0, 0), (1, 3), (2, 2), (3, 4), (4, 2)])
def test_each_right_leg_has_exactly_one_left_leg(k, m):
    for psi in monotone_tables(m + 1, k):
        if psi[-1] != k:
            continue
        legs = [phi for phi in monotone_tables(k + 1, m) if check_galois_pair(phi, psi)]
        assert len(legs) == 1
        assert list(adjoint_of(MonotoneTable(psi, k), "right")) == list(legs[0])
        back = adjoint_of(MonotoneTable(legs[0], m), "left")
        assert tuple(back) == psi


def test_fiber_examples():
    assert list(fiber_of(REP, 3)) == [1]
    assert list(fiber_of(REP, 0)) == [0]
    assert list(fiber_of(REP, 1)) == []
    with pytest.raises(InputError):
        fiber_of(REP, 4)


def test_dual_connection_examples():
    dual = dual_connection(REP, 1)
    assert list(dual.psi) == [0, 0, 1, 2]
    assert list(dual.phi) == [0, 2, 3]
    ident = GaloisPair.from_psi((0, 1, 2, 3), 3)
    free = dual_connection(ident, 1)
    assert list(free.psi) == [0, 0, 0, 0] and list(free.phi) == [0]
    with pytest.raises(HypothesisViolation):
        dual_connection(GaloisPair.from_psi((0, 2), 2), 1)


def test_step_equivalence_examples():
    assert all(step_equivalences(REP, 1).values)
    ident = GaloisPair.from_psi((0, 1, 2, 3), 3)
    assert all(step_equivalences(ident, 1).values)
    jump = step_equivalences(GaloisPair.from_psi((0, 2, 2), 2), 1)
    assert jump.values[:3] == (False, False, False)
    assert jump.consistent


def test_residue_set_examples():
    assert residue_sets(0, 2, 3, 4) == ({1, 3}, {2, 4})
    assert residue_sets(0, 1, 1, 3) == ({1}, {1, 2})
    assert residue_sets(5, 2, 3, 4) == ({2}, {1, 3, 5})
    with pytest.raises(InputError):
        residue_sets(0, 1, 4, 3)


def test_residue_set_cardinalities():
    for w in range(1, 5):
        for m in range(0, 9):
            for k in range(0, w * m + 1):
                for gamma in range(-2 * w, 2 * w + 1):
                    us, vs = residue_sets(gamma, w, k, m)
                    assert len(us) + len(vs) == m
                    assert (us, vs) == residue_sets(gamma % w, w, k, m)


def test_central_theorem_examples():
    report = central_theorem_report(REP, dual_connection(REP, 1), 1)
    assert report.tables["statements"] == [True] * 4
    assert report.tables["partition"] == [{"gamma": 0, "A": [3], "B": [1, 2]}]

    mismatched = GaloisPair.from_psi((0, 1, 2, 2), 2)
    report = central_theorem_report(REP, mismatched, 1)
    assert report.tables["statements"] == [False] * 4
    assert report.check("t22.s1").witness["l"] == 1

    zero = GaloisPair.from_psi((0, 0, 0, 0), 0)
    report = central_theorem_report(zero, dual_connection(zero, 1), 1)
    assert report.passed
    assert report.tables["partition"] == [{"gamma": 0, "A": [], "B": [1, 2, 3]}]


def test_central_theorem_rejects_bad_inputs():
    with pytest.raises(HypothesisViolation):
        central_statements(GaloisPair.from_psi((0, 2), 2), GaloisPair.from_psi((0, 0), 0), 1)
    with pytest.raises(InputError):
        central_statements(REP, REP, 1)


@given(profiles())
def test_dual_connection_properties(data):
    psi, w = data
    pair = GaloisPair.from_psi(psi)
    k, m = pair.k, pair.m
    dual = dual_connection(pair, w)
    eta, tau = dual.psi, dual.phi
    assert eta[0] == 0 and eta[m] == w * m - k
    assert all(0 <= s <= w for s in eta.steps())
    for u in range(1, k + 1):
        for v in range(1, w * m - k + 1):
            if pair.phi[u] + tau[v] == m + 1:
                assert (u - v - k) % w != 0
    assert adjoint_of(adjoint_of(pair.psi, "right"), "left") == pair.psi
    assert all(bool(s) for s in central_statements(pair, dual, w)[0])


@given(st.integers(0, 5), st.integers(0, 5), st.data())
def test_step_statements_always_agree(k, m, data):
    cuts = sorted(data.draw(st.lists(st.integers(0, k), min_size=m, max_size=m)))
    psi = cuts + [k]
    w = data.draw(st.integers(1, 3))
    pair = GaloisPair.from_psi(psi, k)
    statements = step_equivalences(pair, w)
    assert statements.consistent
    if psi[0] == 0:
        assert all(1 <= pair.phi[a] <= m for a in range(1, k + 1))


def test_central_statements_agree_on_perturbed_instances():
    rng = SplitMix64(2024)
    seen = set()
    for i in range(400):
        m, w = rng.randint(0, 6), rng.randint(1, 3)
        pair1, pair2 = central_instance(rng, m, w, CENTRAL_MODES[i % 4])
        values = [bool(s) for s in central_statements(pair1, pair2, w)[0]]
        assert len(set(values)) == 1
        seen.add(values[0])
    assert seen == {True, False}


def _repetition_bridge():
    ys = list(range(8))
    size = [bin(y).count("1") for y in ys]
    f = [1 if y == 7 else 0 for y in ys]
    sigma = [7 ^ x for x in ys]
    return BridgeTuple(ys, size, f, ys, sigma, 1, 3, 1)


def test_bridge_examples():
    pair1, pair2 = bridge_derive(_repetition_bridge())
    assert list(pair1.phi) == [0, 3]
    assert list(pair2.phi) == [0, 2, 3]
    assert bridge_report(_repetition_bridge()).passed

    degenerate = BridgeTuple(["y0"], [0], [0], ["x"], [0], 2, 0, 0)
    pair1, pair2 = bridge_derive(degenerate)
    assert list(pair1.phi) == [0] and list(pair2.psi) == [0]

    bad = BridgeTuple(["a", "b"], [0, 1], [1, 1], ["x", "y"], [0, 1], 1, 1, 1)
    with pytest.raises(HypothesisViolation) as info:
        bad.validate()
    assert info.value.condition == "bridge.zero_level"
    assert anchor_for("bridge.zero_level") in str(info.value)


def test_bridge_condition_names():
    # slope: w g - f exceeds wm - k
    slope = BridgeTuple(["a", "b", "c"], [0, 1, 1], [0, 0, 1], ["x", "y", "z"], [0, 1, 2], 1, 1, 1)
    assert slope.condition_failure() == ("bridge.slope", "b")
    # successor: nothing sits one level above b
    succ = BridgeTuple(["a", "b"], [0, 1], [0, 0], ["x", "y"], [0, 1], 1, 2, 1)
    assert succ.condition_failure() == ("bridge.successor", "b")
    # predecessor: b climbs more than w above every element one level down
    pred = BridgeTuple(["a", "b", "c"], [0, 1, 2], [0, 0, 2], ["x", "y", "z"], [0, 1, 2], 1, 2, 1)
    assert pred.condition_failure() == ("bridge.predecessor", "c")


def test_bridge_reports_on_random_tuples():
    rng = SplitMix64(11)
    for _ in range(150):
        bt = random_bridge_tuple(rng)
        assert len(bt.y_elems) <= 20
        report = bridge_report(bt)
        assert report.passed, report.failures()


def test_abundance_bridge_examples():
    chain = abundance_bridge_check(4, lambda i, j: i <= j, [0, 1, 2, 3], [0, 1, 2, 3], 1, [3, 2, 1, 0])
    assert chain.passed

    lat = SubspaceLattice(RingSpec.gf(2), 2)
    rho = [min(d, 1) for d in lat.dims]
    report = abundance_bridge_check(len(lat), lat.leq, lat.dims, rho, 1, lat.perp_map(BilinearForm.standard(RingSpec.gf(2), 2)))
    assert report.passed
    assert report.tables["partition"] == [{"gamma": 0, "A": [1], "B": [2]}]

    with pytest.raises(HypothesisViolation):
        abundance_bridge_check(4, lambda i, j: i <= j, [0, 1, 2, 3], [0, 1, 2, 3], 1, [3, 2, 1, 0], k=2)
