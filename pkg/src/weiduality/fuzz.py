"""Seeded instance generators and the aggregated randomized harness.

Every category draws from its own forked stream, so changing one count
leaves the instances of the others untouched.
"""

from __future__ import annotations

from .algebra.chainring import Submodule, enumerate_submodules
from .algebra.lattice import SubspaceLattice
from .algebra.rings import RingSpec
from .demimatroid import random_demimatroid, theorem41_report, theorem42_report
from .demipolymatroid import (
    SubspaceFamily,
    random_chain_family,
    random_demipolymatroid,
    theorem51_report,
)
from .galois import (
    BridgeTuple,
    GaloisPair,
    MonotoneTable,
    abundance_bridge_check,
    adjoint_of,
    bridge_report,
    central_theorem_report,
    dual_connection,
)
from .hamming import random_code, wei_forney_report
from .metric_codes import (
    ChainRingCode,
    random_flag_family,
    theorem71_report,
    theorem72_report,
    theorem73_report,
    theorem74_report,
)
from .posets import Poset, SetFamily
from .report import Report
from .rng import SplitMix64

CATEGORIES = ("codes", "pairs", "bridges", "demimatroids", "polymatroids", "flags", "chain_codes")
DEFAULT_COUNTS = {
    "codes": 40,
    "pairs": 200,
    "bridges": 40,
    "demimatroids": 40,
    "polymatroids": 20,
    "flags": 10,
    "chain_codes": 20,
}

# an abundance on [1, 3] that is not the ideal family of any poset ({1} + {2} is missing)
NON_POSET_FAMILY = SetFamily(3, frozenset({0b000, 0b001, 0b010, 0b101, 0b110, 0b111}))


def poset_shapes(m):
    shapes = [Poset.antichain(m), Poset.chain(m)]
    if m >= 3:
        shapes.append(Poset.v_shape(m))
    return shapes


# --- Galois pairs ------------------------------------------------------------


def random_profile(rng, m, w):
    """psi on [0, m] with psi(0) = 0 and steps in [0, w]."""
    psi = [0]
    for _ in range(m):
        psi.append(psi[-1] + rng.randint(0, w))
    return psi


def random_monotone(rng, m, top):
    """Nondecreasing table on [0, m] ending at ``top``, any step sizes."""
    cuts = sorted(rng.randint(0, top) for _ in range(m))
    return cuts + [top]


def central_instance(rng, m, w, mode):
    """A pair and a candidate dual pair; ``mode`` picks how the second is made.

    exact: the true dual connection.  nudge: one eta value moved within
    its monotone slot.  tau: one tau value moved the same way.  scramble:
    an arbitrary monotone eta.
    """
    psi = random_profile(rng, m, w)
    pair1 = GaloisPair.from_psi(psi)
    exact = dual_connection(pair1, w)
    top = w * m - pair1.k
    if mode == "exact":
        return pair1, exact
    if mode == "scramble":
        return pair1, GaloisPair.from_psi(random_monotone(rng, m, top), top)
    if mode == "nudge":
        # eta must keep eta(m) = wm - k to have an adjoint
        table = list(exact.psi)
        if m >= 1:
            i = rng.randint(0, m - 1)
            table[i] = rng.randint(table[i - 1] if i else 0, table[i + 1])
        eta = MonotoneTable(tuple(table), top)
        return pair1, GaloisPair(adjoint_of(eta, "right"), eta)
    # tau must keep tau(0) = 0
    table = list(exact.phi)
    if top >= 1:
        i = rng.randint(1, top)
        table[i] = rng.randint(table[i - 1], table[i + 1] if i < top else m)
    tau = MonotoneTable(tuple(table), m)
    return pair1, GaloisPair(tau, adjoint_of(tau, "left"))


CENTRAL_MODES = ("exact", "nudge", "tau", "scramble")


def central_reports(rng, count, max_m=6, max_w=3):
    for i in range(count):
        m, w = rng.randint(0, max_m), rng.randint(1, max_w)
        mode = CENTRAL_MODES[i % len(CENTRAL_MODES)]
        pair1, pair2 = central_instance(rng, m, w, mode)
        full = central_theorem_report(pair1, pair2, w)
        # perturbed instances may fail every statement; only agreement is required of them
        report = full if mode == "exact" else Report(full.title, tables=full.tables)
        report.add("t22.equivalent", full.tables["equivalent"], full.tables["statements"])
        yield {"m": m, "w": w, "mode": mode, "pair1": pair1.to_json(), "pair2": pair2.to_json()}, report


# --- bridge tuples -----------------------------------------------------------


def random_bridge_tuple(rng, max_y=20, max_m=5, max_w=3):
    """A tuple meeting all four conditions, built around a monotone spine."""
    m, w = rng.randint(1, max_m), rng.randint(1, max_w)
    spine = random_profile(rng, m, w)
    k = spine[-1]
    levels = list(range(m + 1))
    extra = rng.randint(0, max(0, max_y - len(levels)))
    for _ in range(extra):
        levels.append(rng.randint(0, m))
    points = []
    for pos, b in enumerate(levels):
        if pos <= m:
            points.append((b, spine[b]))
            continue
        lo = max(0, w * b - (w * m - k))
        hi = k
        if b < m:
            hi = min(hi, spine[b + 1])
        hi = min(hi, spine[b - 1] + w) if b else 0
        points.append((b, rng.randint(lo, hi)))
    rng.shuffle(points)
    n_y = len(points)
    sigma = list(range(n_y)) + [rng.randint(0, n_y - 1) for _ in range(rng.randint(0, 4))]
    rng.shuffle(sigma)
    return BridgeTuple(
        tuple(f"y{i}" for i in range(n_y)),
        tuple(g for g, _ in points),
        tuple(f for _, f in points),
        tuple(f"x{i}" for i in range(len(sigma))),
        tuple(sigma),
        w,
        m,
        k,
    )


def bridge_reports(rng, count):
    lattices = [SubspaceLattice(RingSpec.gf(2), 2), SubspaceLattice(RingSpec.gf(2), 3), SubspaceLattice(RingSpec.gf(3), 2)]
    for i in range(count):
        bt = random_bridge_tuple(rng)
        yield {"bridge": {"g": bt.g, "f": bt.f, "sigma": bt.sigma, "w": bt.w, "m": bt.m, "k": bt.k}}, bridge_report(bt)
        lat = lattices[i % len(lattices)]
        w = rng.randint(1, 3)
        dp = random_demipolymatroid(lat, w, rng)
        sigma = lat.perp_map()
        report = abundance_bridge_check(len(lat), lat.leq, lat.dims, dp.f, w, sigma)
        yield {"lattice": [lat.ring.to_json(), lat.n], "w": w, "f": dp.f}, report


# --- demi-matroids -----------------------------------------------------------


def demimatroid_reports(rng, count):
    for i in range(count):
        w = rng.randint(1, 3)
        if i % 2 == 0:
            m = rng.randint(1, 4)
            dm = random_demimatroid(m, w, 0, "rejection", rng=rng)
        else:
            m = rng.randint(1, 6 // w)
            dm = random_demimatroid(m, w, 0, "code-flag", rng=rng)
        for p in poset_shapes(dm.m):
            yield {"demimatroid": dm.to_json(), "poset": p.to_json()}, theorem42_report(dm, p)
        if dm.m == 3:
            yield {"demimatroid": dm.to_json(), "family": NON_POSET_FAMILY.to_json()}, theorem41_report(dm, NON_POSET_FAMILY)


# --- demi-polymatroids ----------------------------------------------------------


def polymatroid_reports(rng, count):
    lattices = [SubspaceLattice(RingSpec.gf(2), 3), SubspaceLattice(RingSpec.gf(3), 2)]
    for i in range(count):
        lat = lattices[i % len(lattices)]
        w = rng.randint(1, 3)
        dp = random_demipolymatroid(lat, w, rng)
        fam = SubspaceFamily.full(lat) if i % 4 < 2 else random_chain_family(lat, rng)
        yield {"polymatroid": dp.to_json(), "family": sorted(fam.members)}, theorem51_report(dp, fam)


# --- flags ----------------------------------------------------------------------

FLAG_SHAPES = ((2, 2, 1), (2, 1, 3), (2, 2, 2), (3, 1, 2), (3, 2, 1), (2, 3, 2), (2, 1, 4))


def flag_reports(rng, count):
    """Gabidulin-Roth reports need the whole lattice of M^E, so they stay at wm <= 4."""
    lattices = {}
    for i in range(count):
        q, w_dim, m = FLAG_SHAPES[i % len(FLAG_SHAPES)]
        ring = RingSpec.gf(q)
        flags = random_flag_family(rng, ring, w_dim, m, lengths=(1, 3), count=rng.randint(1, 2))
        key = flags.to_json()
        for p in poset_shapes(m):
            yield key, theorem72_report(flags, p)
        yield key, theorem73_report(flags)
        if w_dim * m <= 4 and q ** (w_dim * m) <= 81:
            lat = lattices.setdefault((q, w_dim * m), SubspaceLattice(ring, w_dim * m))
            fam = SubspaceFamily.full(lat)
            yield key, theorem71_report(flags, fam)


# --- chain-ring codes -----------------------------------------------------------


CHAIN_RINGS = ((2, 2), (2, 3), (3, 2))


def random_chain_code(rng, ring, m):
    rows = [tuple(rng.randint(0, ring.order - 1) for _ in range(m)) for _ in range(rng.randint(0, m))]
    return ChainRingCode(ring, m, Submodule.span(ring, m, rows))


def chain_code_reports(rng, count):
    for i in range(count):
        p, s = CHAIN_RINGS[i % len(CHAIN_RINGS)]
        ring = RingSpec.zmod(p, s)
        m = rng.randint(1, 3)
        code = random_chain_code(rng, ring, m)
        subcodes = enumerate_submodules(code.code)
        for poset in poset_shapes(m):
            yield code.to_json() | {"poset": poset.to_json()}, theorem74_report(code, poset, subcodes=subcodes)


def code_reports(rng, count, qs=(2, 3), max_m=7):
    for _ in range(count):
        ring = RingSpec.gf(rng.choice(list(qs)))
        code = random_code(rng, ring, rng.randint(1, max_m))
        yield code.to_json(), wei_forney_report(code)


# --- harness --------------------------------------------------------------------


def run_fuzz(seed=0, counts=None, qs=(2, 3), max_m=7):
    """Run every category and fold the reports into one.

    Each check name appears once; it passes when it passed on every
    instance, and otherwise carries the first failing instance.
    """
    counts = dict(DEFAULT_COUNTS if counts is None else counts)
    root = SplitMix64(seed)
    streams = {name: root.fork(tag) for tag, name in enumerate(CATEGORIES)}
    generators = {
        "codes": lambda rng, n: code_reports(rng, n, qs, max_m),
        "pairs": central_reports,
        "bridges": bridge_reports,
        "demimatroids": demimatroid_reports,
        "polymatroids": polymatroid_reports,
        "flags": flag_reports,
        "chain_codes": chain_code_reports,
    }
    seen, failures, order = {}, {}, []
    instances = {}
    for name in CATEGORIES:
        n = counts.get(name, 0)
        instances[name] = n
        if not n:
            continue
        for index, (instance, report) in enumerate(generators[name](streams[name], n)):
            for check in report.checks:
                if check.name not in seen:
                    seen[check.name] = [0, check.anchor]
                    order.append(check.name)
                seen[check.name][0] += 1
                if not check.passed and check.name not in failures:
                    failures[check.name] = {"category": name, "index": index, "instance": instance, "witness": check.witness}
    merged = Report("randomized verification")
    for name in sorted(order):
        runs, anchor = seen[name]
        merged.add(name, name not in failures, failures.get(name), anchor=anchor)
    merged.tables["seed"] = seed
    merged.tables["instances"] = instances
    merged.tables["runs_per_check"] = {name: seen[name][0] for name in sorted(order)}
    return merged
