from itertools import combinations

import pytest

from weiduality.errors import InputError
from weiduality.posets import (
    Poset,
    SetFamily,
    dual_poset,
    elements_of,
    generated_ideal,
    ideals,
    is_abundance_family,
    is_graded_abundance,
    mask_of,
    poset_from_family,
)

PROP42_FAMILY = SetFamily.of(3, [mask_of(s) for s in ([], [1], [2], [1, 3], [2, 3], [1, 2, 3])])


def all_posets(n):
    """Every partial order on [1, n], found by filtering all relations."""
    pairs = [(a, b) for a in range(n) for b in range(n) if a != b]
    found = []
    for r in range(len(pairs) + 1):
        for chosen in combinations(pairs, r):
            down = [1 << i for i in range(n)]
            for a, b in chosen:
                down[b] |= 1 << a
            try:
                found.append(Poset(n, tuple(down)))
            except InputError:
                pass
    return found


def naive_ideals(p):
    return {mask for mask in range(1 << p.n) if all(p.down[e - 1] & ~mask == 0 for e in elements_of(mask))}


def family(*sets, m=3):
    return {mask_of(s) for s in sets}


def test_poset_counts():
    # labelled posets on 1..4 points: 1, 3, 19, 219
    assert [len(all_posets(n)) for n in range(1, 5)] == [1, 3, 19, 219]


def test_ideal_examples():
    assert len(ideals(Poset.antichain(3))) == 8
    assert ideals(Poset.chain(3)).members == family([], [1], [1, 2], [1, 2, 3])
    assert ideals(Poset.v_shape(3)).members == family([], [1], [2], [1, 2], [1, 2, 3])


def test_generated_ideal_examples():
    assert elements_of(generated_ideal(Poset.chain(3), mask_of([3]))) == [1, 2, 3]
    for b in range(8):
        assert generated_ideal(Poset.antichain(3), b) == b
    assert elements_of(generated_ideal(Poset.v_shape(3), mask_of([3]))) == [1, 2, 3]


def test_dual_poset_examples():
    assert dual_poset(Poset.antichain(3)) == Poset.antichain(3)
    chain = dual_poset(Poset.chain(3))
    assert chain.leq(3, 2) and chain.leq(2, 1) and not chain.leq(1, 2)
    lam = dual_poset(Poset.v_shape(3))
    assert lam.leq(3, 1) and lam.leq(3, 2)


def test_abundance_examples():
    assert is_abundance_family(ideals(Poset.v_shape(3)))
    assert is_abundance_family(PROP42_FAMILY)
    assert not is_abundance_family(SetFamily.of(2, [0, 0b11]))


def test_poset_from_family_examples():
    rebuilt, _ = poset_from_family(ideals(Poset.chain(3)))
    assert rebuilt == Poset.chain(3)
    rebuilt, _ = poset_from_family(SetFamily.power_set(3))
    assert rebuilt == Poset.antichain(3)
    none, verdict = poset_from_family(PROP42_FAMILY)
    assert none is None
    assert verdict.witness == {"kind": "union", "a": [1], "b": [2]}


@pytest.mark.parametrize("n", range(0, 5))
def test_exhaustive_poset_properties(n):
    for p in all_posets(n) if n else [Poset(0, ())]:
        fam = ideals(p)
        assert fam.members == naive_ideals(p)
        assert 0 in fam and fam.full in fam
        assert is_abundance_family(fam)
        assert ideals(dual_poset(p)).members == fam.complement().members
        rebuilt, failure = poset_from_family(fam)
        assert failure is None and ideals(rebuilt).members == fam.members
        for a in fam:
            for b in fam:
                assert a | b in fam and a & b in fam
        for b in range(1 << n):
            g = generated_ideal(p, b)
            assert g in fam and b & ~g == 0
            assert all(b & ~i or g & ~i == 0 for i in fam)


@pytest.mark.parametrize("m", [2, 3])
def test_complement_of_abundance_is_abundance(m):
    # every family on [1, m] containing the empty and the full set
    inner = list(range(1, (1 << m) - 1))
    for r in range(len(inner) + 1):
        for chosen in combinations(inner, r):
            fam = SetFamily.of(m, [0, (1 << m) - 1, *chosen])
            assert bool(is_abundance_family(fam)) == bool(is_abundance_family(fam.complement()))


def test_complement_of_abundance_is_abundance_m4_sample():
    inner = list(range(1, 15))
    count = 0
    for bits in range(0, 1 << 14, 7):
        chosen = [x for i, x in enumerate(inner) if bits >> i & 1]
        fam = SetFamily.of(4, [0, 15, *chosen])
        ok = bool(is_abundance_family(fam))
        count += ok
        assert ok == bool(is_abundance_family(fam.complement()))
    assert count > 0


def test_graded_abundance_examples():
    # subspace lattice of F_2^2: 0 < three lines < plane
    leq = lambda i, j: i == j or i == 0 or j == 4
    assert is_graded_abundance(5, leq, [0, 1, 1, 1, 2])
    boolean = [b for b in range(8)]
    assert is_graded_abundance(8, lambda i, j: i & ~j == 0, [bin(b).count("1") for b in boolean])
    verdict = is_graded_abundance(2, lambda i, j: i <= j, [0, 2])
    assert not verdict and verdict.reason == "abundance.successor"


def test_poset_json_and_errors():
    p = Poset.from_cover_pairs(3, [(1, 3), (2, 3)])
    assert p == Poset.v_shape(3)
    assert Poset.from_cover_pairs(3, p.to_json()["cover_pairs"]) == p
    with pytest.raises(InputError):
        Poset.from_cover_pairs(2, [(1, 2), (2, 1)])
    with pytest.raises(InputError):
        Poset.from_cover_pairs(2, [(1, 3)])
