"""w-demi-matroids: rank tables over all subsets of [1, m].

``f[mask]`` is the rank of the subset encoded by ``mask``.  Validity only
needs the unit steps ``(A, A + e)``; longer chains follow by summing.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConsistencyError, HypothesisViolation, InputError
from .galois import level_maxima, pair_from_maps, partition_verdict, reflection_verdict, weight_partition
from .posets import SetFamily, dual_poset, elements_of, generated_ideal, ideals, is_abundance_family, popcount
from .report import Report, Verdict

MAX_GROUND = 16


@dataclass(frozen=True)
class DemiMatroid:
    m: int
    w: int
    f: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "f", tuple(int(v) for v in self.f))
        if not 0 <= self.m <= MAX_GROUND:
            raise InputError(f"ground set size {self.m} outside [0, {MAX_GROUND}]")
        if self.w < 1:
            raise InputError("w must be positive")
        if len(self.f) != 1 << self.m:
            raise InputError(f"table has {len(self.f)} entries, expected {1 << self.m}")

    @classmethod
    def from_function(cls, m, w, fn):
        return cls(m, w, tuple(fn(mask) for mask in range(1 << m)))

    @property
    def full(self):
        return (1 << self.m) - 1

    @property
    def k(self):
        return self.f[self.full]

    def __call__(self, mask):
        return self.f[mask]

    def to_json(self):
        return {"m": self.m, "w": self.w, "f": list(self.f)}


def validate(dm: DemiMatroid):
    f, w = dm.f, dm.w
    if f[0] != 0:
        return Verdict.failed("f(empty) != 0", {"A": [], "value": f[0]})
    for mask in range(1 << dm.m):
        for i in range(dm.m):
            if not mask >> i & 1:
                step = f[mask | 1 << i] - f[mask]
                if not 0 <= step <= w:
                    return Verdict.failed(
                        "unit step outside [0, w]", {"A": elements_of(mask), "B": elements_of(mask | 1 << i)}
                    )
    return Verdict.passed()


def _require_valid(dm):
    verdict = validate(dm)
    if not verdict:
        raise HypothesisViolation(f"not a {dm.w}-demi-matroid: {verdict.reason}", "demimatroid", verdict.witness)


def dual(dm: DemiMatroid):
    """h(A) = f(E - A) + w|A| - f(E)."""
    _require_valid(dm)
    full, k, w = dm.full, dm.k, dm.w
    return DemiMatroid(dm.m, w, tuple(dm.f[full ^ a] + w * popcount(a) - k for a in range(1 << dm.m)))


def weights_profiles(dm: DemiMatroid, fam: SetFamily):
    """(d, K) as a Galois pair: d_a = min |B| with a <= f(B), K_b = max f(B) over |B| = b."""
    if fam.m != dm.m:
        raise InputError("family and demi-matroid have different ground sets")
    verdict = is_abundance_family(fam)
    if not verdict:
        raise HypothesisViolation(f"family is not an abundance: {verdict.reason}", "family", verdict.witness)
    points = [(popcount(b), dm.f[b]) for b in fam]
    pair = pair_from_maps(points, dm.k, dm.m)
    exact = level_maxima(points, dm.m)
    if list(pair.psi) != exact:
        raise ConsistencyError(f"profile by levels {exact} differs from {list(pair.psi)}")
    return pair


def remark43_tables(dm: DemiMatroid, p):
    """Weights and profiles through generated ideals over every subset."""
    sizes = [popcount(generated_ideal(p, b)) for b in range(1 << dm.m)]
    d = [min(sizes[b] for b in range(1 << dm.m) if a <= dm.f[b]) for a in range(dm.k + 1)]
    K = [max(dm.f[b] for b in range(1 << dm.m) if sizes[b] <= l) for l in range(dm.m + 1)]
    return d, K


def weights_profiles_poset(dm: DemiMatroid, p):
    if p.n != dm.m:
        raise InputError("poset and demi-matroid have different ground sets")
    pair = weights_profiles(dm, ideals(p))
    d, K = remark43_tables(dm, p)
    if d != list(pair.phi) or K != list(pair.psi):
        raise ConsistencyError(f"generated-ideal tables {d}, {K} differ from {pair.to_json()}")
    return pair


def _duality_report(dm, fam, dual_fam, prefix, title):
    _require_valid(dm)
    h = dual(dm)
    m, w, k = dm.m, dm.w, dm.k
    report = Report(title)
    report.add("prop41.valid", validate(h))
    report.add("prop41.total", h.k == w * m - k, {"h(E)": h.k, "expected": w * m - k})
    report.add("prop41.involution", dual(h) == dm)
    pair1 = weights_profiles(dm, fam)
    pair2 = weights_profiles(h, dual_fam)
    report.add(f"{prefix}.identity", reflection_verdict(pair1, pair2.psi, w))
    parts = weight_partition(pair1.phi, pair2.phi, w, k, m)
    report.add(f"{prefix}.partition", partition_verdict(parts, m))
    report.tables.update(
        d=list(pair1.phi), K=list(pair1.psi), dual_d=list(pair2.phi), dual_K=list(pair2.psi),
        partition=[{"gamma": g, "A": sorted(a), "B": sorted(b)} for g, (a, b) in enumerate(parts)],
    )
    return report, pair1, pair2


def theorem41_report(dm: DemiMatroid, fam: SetFamily, prefix="t41"):
    report, _, _ = _duality_report(dm, fam, fam.complement(), prefix, "demi-matroid duality over a family")
    return report


def theorem42_report(dm: DemiMatroid, p, prefix="t42"):
    fam = ideals(p)
    dual_fam = ideals(dual_poset(p))
    report, pair1, pair2 = _duality_report(dm, fam, dual_fam, prefix, "demi-matroid duality over a poset")
    report.add(f"{prefix}.dual_ideals", dual_fam == fam.complement())
    for name, table_dm, poset, pair in (("code", dm, p, pair1), ("dual", dual(dm), dual_poset(p), pair2)):
        d, K = remark43_tables(table_dm, poset)
        report.add(f"remark43.{name}", d == list(pair.phi) and K == list(pair.psi), {"d": d, "K": K})
    return report


def random_demimatroid(m, w, seed, strategy="rejection", rng=None):
    """Seeded random valid table.

    ``rejection`` fills subsets by size, drawing each value uniformly from
    the interval its one-smaller subsets allow, and restarts when that
    interval is empty.  ``code-flag`` reads the rank table off a random
    odd flag of binary codes in (GF(2)^w)^m.
    """
    from .rng import SplitMix64

    rng = rng or SplitMix64(seed)
    if strategy == "rejection":
        if m > 4:
            raise InputError("rejection sampling is limited to m <= 4")
        order = sorted(range(1 << m), key=lambda b: (popcount(b), b))
        while True:
            f = [0] * (1 << m)
            for b in order[1:]:
                lows = [f[b & ~(1 << i)] for i in range(m) if b >> i & 1]
                lo, hi = max(lows), min(lows) + w
                if lo > hi:
                    break
                f[b] = rng.randint(lo, hi)
            else:
                return DemiMatroid(m, w, tuple(f))
    if strategy == "code-flag":
        from .algebra.rings import RingSpec
        from .metric_codes import f1_demimatroid, random_flag_family

        flags = random_flag_family(rng, RingSpec.gf(2), w, m, lengths=(1, 3), count=rng.randint(1, 2))
        return f1_demimatroid(flags)
    raise InputError(f"unknown strategy {strategy!r}")


def from_code(code):
    """f(J) = dim(C & delta(J)) for a linear code (a 1-demi-matroid)."""
    return DemiMatroid(code.m, 1, code.intersection_dims)
