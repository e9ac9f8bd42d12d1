"""w-demi-polymatroids on the subspace lattice of GF(q)^n, and q-matroids.

Rank functions are tables indexed by the lattice's canonical subspace
ids; the rank of a subspace is its dimension.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .algebra.enumeration import enumerate_subspaces
from .algebra.lattice import SubspaceLattice
from .algebra.linalg import BilinearForm
from .errors import ConsistencyError, HypothesisViolation, InputError
from .galois import (
    abundance_bridge_check,
    level_maxima,
    pair_from_maps,
    partition_verdict,
    reflection_verdict,
    step_equivalences,
    weight_partition,
)
from .posets import is_graded_abundance
from .report import Report, Verdict


@dataclass(frozen=True, eq=False)
class DemiPolymatroid:
    lattice: SubspaceLattice
    w: int
    f: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "f", tuple(int(v) for v in self.f))
        if self.w < 1:
            raise InputError("w must be positive")
        if len(self.f) != len(self.lattice):
            raise InputError(f"table has {len(self.f)} entries, lattice has {len(self.lattice)}")

    @classmethod
    def from_function(cls, lattice, w, fn):
        return cls(lattice, w, tuple(fn(s) for s in lattice.spaces))

    @property
    def n(self):
        return self.lattice.n

    @property
    def k(self):
        return self.f[self.lattice.top]

    def __eq__(self, other):
        return (
            isinstance(other, DemiPolymatroid)
            and self.lattice is other.lattice
            and self.w == other.w
            and self.f == other.f
        )

    def __hash__(self):
        return hash((id(self.lattice), self.w, self.f))

    def __call__(self, space):
        return self.f[self.lattice.index(space)]

    def to_json(self):
        return {
            "ring": self.lattice.ring.to_json(),
            "n": self.n,
            "w": self.w,
            "f": {str(i): v for i, v in enumerate(self.f)},
        }


def validate_polymatroid(dp: DemiPolymatroid):
    lat, f, w = dp.lattice, dp.f, dp.w
    if f[lat.bottom] != 0:
        return Verdict.failed("f({0}) != 0", {"value": f[lat.bottom]})
    for x, y in lat.cover_pairs():
        if not 0 <= f[y] - f[x] <= w:
            return Verdict.failed("cover step outside [0, w]", {"X": lat[x].to_json(), "Y": lat[y].to_json()})
    return Verdict.passed()


def _require_valid(dp):
    verdict = validate_polymatroid(dp)
    if not verdict:
        raise HypothesisViolation(f"not a {dp.w}-demi-polymatroid: {verdict.reason}", "polymatroid", verdict.witness)


@dataclass(frozen=True, eq=False)
class SubspaceFamily:
    lattice: SubspaceLattice
    members: frozenset

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))
        lat = self.lattice
        if lat.bottom not in self.members or lat.top not in self.members:
            raise HypothesisViolation("family must contain {0} and the full space", "subspace_family")
        ids = sorted(self.members)
        verdict = is_graded_abundance(len(ids), lambda i, j: lat.leq(ids[i], ids[j]), [lat.dims[i] for i in ids])
        if not verdict:
            raise HypothesisViolation(f"family is not an abundance: {verdict.reason}", "subspace_family", verdict.witness)

    @classmethod
    def full(cls, lattice):
        return cls(lattice, frozenset(range(len(lattice))))

    @classmethod
    def of_spaces(cls, lattice, spaces):
        return cls(lattice, frozenset(lattice.index(s) for s in spaces))

    def perp(self, form=None):
        perp = self.lattice.perp_map(form)
        return SubspaceFamily(self.lattice, frozenset(perp[i] for i in self.members))

    def __iter__(self):
        return iter(sorted(self.members))

    def __len__(self):
        return len(self.members)

    def __eq__(self, other):
        return isinstance(other, SubspaceFamily) and self.lattice is other.lattice and self.members == other.members

    def __hash__(self):
        return hash((id(self.lattice), self.members))


def random_chain_family(lattice, rng):
    """{0} < V_1 < ... < full space along randomly chosen covers."""
    uppers = [[] for _ in range(len(lattice))]
    for x, y in lattice.cover_pairs():
        uppers[x].append(y)
    chain = [lattice.bottom]
    while chain[-1] != lattice.top:
        chain.append(rng.choice(sorted(uppers[chain[-1]])))
    return SubspaceFamily(lattice, frozenset(chain))


def galois_closed_family(lattice):
    """Subspaces spanned by vectors over the prime field, found by extending scalars."""
    from .algebra.rings import RingSpec

    ring = lattice.ring
    base = RingSpec.gf(ring.p)
    members = {lattice.index(s.extend_scalars(ring)) for s in enumerate_subspaces(base, lattice.n, cap=lattice.cap)}
    return SubspaceFamily(lattice, frozenset(members))


def weights_profiles(dp: DemiPolymatroid, fam: SubspaceFamily):
    if fam.lattice is not dp.lattice:
        raise InputError("family and rank table use different lattices")
    dims = dp.lattice.dims
    points = [(dims[i], dp.f[i]) for i in fam]
    pair = pair_from_maps(points, dp.k, dp.n)
    exact = level_maxima(points, dp.n)
    if list(pair.psi) != exact:
        raise ConsistencyError(f"profile by levels {exact} differs from {list(pair.psi)}")
    return pair


def cor51_verdicts(pair, w):
    """Profile starts at 0, steps at most w, and d_r + 1 <= d_{r+w}."""
    steps = step_equivalences(pair, w)
    out = {
        "cor51.start": Verdict(pair.psi[0] == 0, "K_0 != 0"),
        "cor51.steps": Verdict(steps.psi_step, "profile step exceeds w"),
        "cor51.gap": Verdict(bool(steps.phi_gap) and bool(steps.phi_positive), "weight gap below 1"),
    }
    return out


def dual_polymatroid(dp: DemiPolymatroid, form: BilinearForm | None = None):
    """h(D) = f(perp-left D) + w dim D - k."""
    _require_valid(dp)
    lat = dp.lattice
    if form is not None and form.n != dp.n:
        raise InputError("form dimension does not match the ambient space")
    left = lat.left_perp_map(form)
    k, w = dp.k, dp.w
    return DemiPolymatroid(lat, w, tuple(dp.f[left[i]] + w * lat.dims[i] - k for i in range(len(lat))))


def reciprocal_verdict(dp, h, form=None):
    """f(C) = h(C^perp) + w dim C - h(N) for every C."""
    lat = dp.lattice
    right = lat.perp_map(form)
    for i in range(len(lat)):
        if dp.f[i] != h.f[right[i]] + dp.w * lat.dims[i] - h.k:
            return Verdict.failed("reciprocal identity fails", lat[i].to_json())
    return Verdict.passed()


def theorem51_report(dp: DemiPolymatroid, fam: SubspaceFamily, form=None, prefix="t51"):
    _require_valid(dp)
    h = dual_polymatroid(dp, form)
    n, w, k = dp.n, dp.w, dp.k
    theta = fam.perp(form)
    report = Report("demi-polymatroid duality")
    report.add("dual_polymatroid.valid", validate_polymatroid(h))
    report.add("dual_polymatroid.total", h.k == w * n - k)
    report.add("dual_polymatroid.reciprocal", reciprocal_verdict(dp, h, form))
    report.add("dual_polymatroid.involution", dual_polymatroid(h, form) == dp)
    pair1 = weights_profiles(dp, fam)
    pair2 = weights_profiles(h, theta)
    for side, pair in (("code", pair1), ("dual", pair2)):
        for name, verdict in cor51_verdicts(pair, w).items():
            report.add(f"{name}.{side}", verdict)
    report.add(f"{prefix}.identity", reflection_verdict(pair1, pair2.psi, w))
    parts = weight_partition(pair1.phi, pair2.phi, w, k, n)
    report.add(f"{prefix}.partition", partition_verdict(parts, n))
    report.tables.update(
        d=list(pair1.phi), K=list(pair1.psi), dual_d=list(pair2.phi), dual_K=list(pair2.psi),
        partition=[{"gamma": g, "A": sorted(a), "B": sorted(b)} for g, (a, b) in enumerate(parts)],
    )
    return report


def random_demipolymatroid(lattice, w, rng):
    """Fill ranks by dimension within the interval the hyperplanes allow."""
    order = sorted(range(len(lattice)), key=lambda i: (lattice.dims[i], i))
    covers = lattice.lower_covers
    while True:
        f = [0] * len(lattice)
        for i in order[1:]:
            lows = [f[j] for j in covers[i]]
            lo, hi = max(lows), min(lows) + w
            if lo > hi:
                break
            f[i] = rng.randint(lo, hi)
        else:
            return DemiPolymatroid(lattice, w, tuple(f))


# --- q-matroids ---------------------------------------------------------


@dataclass(frozen=True, eq=False)
class QMatroid:
    lattice: SubspaceLattice
    rho: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "rho", tuple(int(v) for v in self.rho))
        if len(self.rho) != len(self.lattice):
            raise InputError("rank table does not cover the lattice")

    @property
    def k(self):
        return self.rho[self.lattice.top]


def _meet_join(lattice):
    spaces = lattice.spaces
    size = len(spaces)
    meet = [[0] * size for _ in range(size)]
    join = [[0] * size for _ in range(size)]
    for a in range(size):
        for b in range(a, size):
            meet[a][b] = meet[b][a] = lattice.index(spaces[a] & spaces[b])
            join[a][b] = join[b][a] = lattice.index(spaces[a] + spaces[b])
    return meet, join


_MEET_JOIN = {}


def meet_join(lattice):
    key = id(lattice)
    if key not in _MEET_JOIN:
        _MEET_JOIN[key] = (lattice, _meet_join(lattice))
    return _MEET_JOIN[key][1]


def validate_qmatroid(qm: QMatroid):
    lat, rho = qm.lattice, qm.rho
    for i in range(len(lat)):
        if not 0 <= rho[i] <= lat.dims[i]:
            return Verdict.failed("rank outside [0, dim]", lat[i].to_json())
    for x, y in lat.cover_pairs():
        if rho[x] > rho[y]:
            return Verdict.failed("rank decreases", {"X": lat[x].to_json(), "Y": lat[y].to_json()})
    meet, join = meet_join(lat)
    for a in range(len(lat)):
        for b in range(a + 1, len(lat)):
            if rho[meet[a][b]] + rho[join[a][b]] > rho[a] + rho[b]:
                return Verdict.failed("not submodular", {"X": lat[a].to_json(), "Y": lat[b].to_json()})
    return Verdict.passed()


def order_reversal_verdict(lattice, sigma):
    if sorted(sigma) != list(range(len(lattice))):
        return Verdict.failed("sigma is not a bijection")
    size = len(lattice)
    for x in range(size):
        for y in range(size):
            if lattice.leq(sigma[x], sigma[y]) != lattice.leq(y, x):
                return Verdict.failed("sigma does not reverse the order", {"x": x, "y": y})
    return Verdict.passed()


def dual_qmatroid(qm: QMatroid, sigma):
    """theta(v) = rho(sigma(v)) + dim v - k."""
    lat = qm.lattice
    return QMatroid(lat, tuple(qm.rho[sigma[i]] + lat.dims[i] - qm.k for i in range(len(lat))))


def qmatroid_report(qm: QMatroid, form=None):
    lat = qm.lattice
    verdict = validate_qmatroid(qm)
    if not verdict:
        raise HypothesisViolation(f"not a q-matroid: {verdict.reason}", "ex31", verdict.witness)
    sigma = lat.perp_map(form)
    reversal = order_reversal_verdict(lat, sigma)
    if not reversal:
        raise HypothesisViolation(reversal.reason, "ex31.order_reversing", reversal.witness)
    theta = dual_qmatroid(qm, sigma)
    report = Report("q-matroid duality")
    report.add("ex31.order_reversing", reversal)
    report.add("ex31.dual_valid", validate_qmatroid(theta))
    report.add("ex31.double_dual", dual_qmatroid(theta, sigma).rho == qm.rho)
    n, k, dims = lat.n, qm.k, lat.dims
    pair1 = pair_from_maps(zip(dims, qm.rho), k, n)
    pair2 = pair_from_maps(zip(dims, theta.rho), n - k, n)
    report.add("ex31.identity", reflection_verdict(pair1, pair2.psi, 1))
    parts = weight_partition(pair1.phi, pair2.phi, 1, k, n)
    report.add("ex31.partition", partition_verdict(parts, n))
    bridge = abundance_bridge_check(len(lat), lat.leq, dims, qm.rho, 1, sigma)
    report.extend(bridge)
    same = bridge.tables["tau"] == list(pair2.phi) and bridge.tables["eta"] == list(pair2.psi)
    report.add("ex31.bridge_agrees", same)
    report.tables.update(
        rho=list(qm.rho), theta=list(theta.rho), phi=list(pair1.phi), psi=list(pair1.psi),
        tau=list(pair2.phi), eta=list(pair2.psi), A=sorted(parts[0][0]), B=sorted(parts[0][1]),
    )
    return report


def all_qmatroids(lattice):
    """Every valid q-matroid rank table (small lattices only)."""
    choices = [range(d + 1) for d in lattice.dims]
    out = []
    for rho in product(*choices):
        if rho[lattice.bottom]:
            continue
        qm = QMatroid(lattice, rho)
        if validate_qmatroid(qm):
            out.append(qm)
    return out


def uniform_qmatroid(lattice, rank):
    return QMatroid(lattice, tuple(min(d, rank) for d in lattice.dims))
