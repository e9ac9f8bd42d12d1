import pytest
from hypothesis import given, settings, strategies as st

from oracles import Field, all_subspaces, dim_of
from weiduality.algebra import BilinearForm, RingSpec, SubspaceLattice
from weiduality.algebra.chainring import Submodule
from weiduality.algebra.linalg import Subspace
from weiduality.demimatroid import validate
from weiduality.demipolymatroid import galois_closed_family
from weiduality.errors import HypothesisViolation, InputError
from weiduality.metric_codes import (
    ChainRingCode,
    CodeFlagFamily,
    alternating,
    consistency_report,
    delsarte_weights,
    dual_flags,
    flatten_matrix,
    free_closures,
    ghwr_weights,
    gr_weights,
    min_rank_distance,
    poset_weights,
    prop61_report,
    random_flag_family,
    rank_demimatroid,
    theorem71_report,
    theorem72_report,
    theorem73_report,
    theorem74_report,
    unflatten,
)
from weiduality.posets import Poset
from weiduality.rng import SplitMix64

F2 = RingSpec.gf(2)
Z4 = RingSpec.zmod(2, 2)
PARITY = [(1, 1, 0, 0), (0, 1, 1, 0), (0, 0, 1, 1)]
REPETITION = [(1, 1, 1, 1)]


def parity_over_repetition():
    return CodeFlagFamily.from_generators(F2, 1, 4, [[PARITY, REPETITION, []]])


def test_matrix_layout():
    mat = ((1, 2, 3), (4, 5, 6))
    word = flatten_matrix(mat)
    assert word == (1, 4, 2, 5, 3, 6)
    assert unflatten(word, 2) == mat
    assert alternating([3, 2, 1]) == 2


def test_flag_construction():
    flags = parity_over_repetition()
    assert flags.lengths == [3] and flags.k == 2
    assert flags.f0(flags.delta(0b011)) == 1
    assert flags.f1(0b011) == 1
    with pytest.raises(InputError):
        CodeFlagFamily.from_generators(F2, 1, 4, [[REPETITION, PARITY, []]])
    with pytest.raises(InputError):
        CodeFlagFamily.from_generators(F2, 1, 4, [])


def test_relative_weights_over_antichain():
    flags = parity_over_repetition()
    pair = poset_weights(flags, Poset.antichain(4))
    assert list(pair.phi) == [0, 2, 3]
    report = theorem72_report(flags, Poset.antichain(4))
    assert report.passed, report.failures()
    # the dual flag is the full space over parity over repetition
    assert report.tables["dual_d"] == [0, 1, 4]
    assert report.tables["partition"] == [{"gamma": 0, "A": [2, 3], "B": [1, 4]}]


def test_rank_metric_examples():
    e11 = CodeFlagFamily.from_generators(F2, 2, 2, [[[((1, 0), (0, 0))]]])
    assert list(delsarte_weights(e11).phi) == [0, 1]
    assert min_rank_distance(e11.flags[0][0], 2) == 1
    ident = Subspace.span(F2, 4, [flatten_matrix(((1, 0), (0, 1)))])
    assert min_rank_distance(ident, 2) == 2
    flags = CodeFlagFamily.single(ident, 2)
    assert list(delsarte_weights(flags).phi) == [0, 2]
    report = theorem73_report(flags)
    assert report.passed, report.failures()


def test_gabidulin_roth_examples_over_gf4():
    f4 = RingSpec.gf(4)
    lat = SubspaceLattice(f4, 2)
    fam = galois_closed_family(lat)
    ones = CodeFlagFamily.single(Subspace.span(f4, 2, [(1, 1)]))
    assert list(gr_weights(ones, fam).phi) == [0, 1]
    twisted = CodeFlagFamily.single(Subspace.span(f4, 2, [(1, 2)]))
    assert list(gr_weights(twisted, fam).phi) == [0, 2]
    report = theorem71_report(twisted, fam)
    assert report.passed, report.failures()
    assert report.tables["partition"] == [{"gamma": 0, "A": [2], "B": [1]}]
    assert report.tables["perp_closed"]


def test_zero_code():
    zero = CodeFlagFamily.single(Subspace.span(F2, 3, []))
    assert zero.k == 0
    for report in (theorem71_report(zero), theorem72_report(zero, Poset.chain(3)), theorem73_report(zero)):
        assert report.passed, report.failures()


def test_dual_flag_hypotheses():
    even = CodeFlagFamily.from_generators(F2, 1, 4, [[PARITY, REPETITION]])
    with pytest.raises(HypothesisViolation) as info:
        dual_flags(even)
    assert info.value.condition == "remark71.odd_length"
    mixed = CodeFlagFamily.from_generators(F2, 1, 4, [[PARITY], [REPETITION]])
    assert not mixed.common_k()
    with pytest.raises(HypothesisViolation) as info:
        dual_flags(mixed)
    assert info.value.condition == "flags.common_k"


def relative_gr_by_sets(flags, field):
    """d_r = min dim V with sum_i (-1)^(i+1) dim(C_i & V) >= r, by set intersection."""
    n = flags.n
    spaces = all_subspaces(field, n)
    codes = [[frozenset(c.elements()) for c in flag] for flag in flags.flags]

    def f(v):
        return max(sum((-1) ** i * dim_of(field, c & v) for i, c in enumerate(flag)) for flag in codes)

    ranks = {v: f(v) for v in spaces}
    return [min(dim_of(field, v) for v in spaces if ranks[v] >= r) for r in range(flags.k + 1)]


@pytest.mark.parametrize("seed", range(6))
def test_gr_weights_match_set_oracle(seed):
    rng = SplitMix64(seed)
    flags = random_flag_family(rng, F2, 1, 3, lengths=(1, 3), count=2)
    assert list(gr_weights(flags).phi) == relative_gr_by_sets(flags, Field(2))


def test_induced_structures_on_examples():
    flags = parity_over_repetition()
    report = prop61_report(flags)
    assert report.passed, report.failures()
    assert consistency_report(flags).passed


@given(st.integers(0, 2**32), st.sampled_from([(1, 3), (2, 2), (3, 1), (2, 3)]), st.sampled_from([2, 3]))
@settings(max_examples=30)
def test_random_flags(seed, shape, q):
    w_dim, m = shape
    rng = SplitMix64(seed)
    flags = random_flag_family(rng, RingSpec.gf(q), w_dim, m, count=rng.randint(1, 2))
    report = prop61_report(flags, full_lattice_limit=300)
    assert report.passed, report.failures()
    for p in (Poset.antichain(m), Poset.chain(m)):
        report = theorem72_report(flags, p)
        assert report.passed, report.failures()
    report = theorem73_report(flags)
    assert report.passed, report.failures()
    if w_dim * m <= 4:
        report = theorem71_report(flags)
        assert report.passed, report.failures()


def test_asymmetric_form():
    form = BilinearForm(F2, ((1, 1, 0), (0, 1, 0), (0, 0, 1)))
    rng = SplitMix64(4)
    for _ in range(5):
        flags = random_flag_family(rng, F2, 1, 3, count=2)
        report = theorem71_report(flags, form=form)
        assert report.passed, report.failures()


def test_chain_ring_examples():
    code = ChainRingCode.from_rows(Z4, [(2, 2)])
    report = theorem74_report(code, Poset.antichain(2))
    assert report.passed, report.failures()
    assert Submodule.span(Z4, 2, [(1, 1)]).key() == free_closures(code.code)[0].key()
    assert report.tables["d"] == [0, 2]
    assert report.tables["dual_d"] == [0, 2]

    unit = ChainRingCode.from_rows(Z4, [(0, 1)])
    assert list(ghwr_weights(unit, Poset.chain(2)).phi) == [0, 2]
    assert list(ghwr_weights(unit, Poset.antichain(2)).phi) == [0, 1]
    assert validate(rank_demimatroid(unit.code))


@pytest.mark.parametrize("rows", [[(2, 0, 2)], [(1, 2, 3), (0, 2, 2)], [(2, 2, 0), (0, 0, 2)], [(1, 0, 1)]])
def test_chain_ring_duality_over_posets(rows):
    code = ChainRingCode.from_rows(Z4, rows)
    for p in (Poset.antichain(3), Poset.chain(3), Poset.v_shape(3)):
        report = theorem74_report(code, p)
        assert report.passed, report.failures()
