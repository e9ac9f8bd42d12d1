"""Code flags in M^E with M = GF(q)^w, and chain-ring codes over Z/p^s.

A word of M^E is stored flat: coordinate ``e`` occupies positions
``e*w .. e*w + w - 1``.  Reading those blocks as columns turns the word
into a w x m matrix, which is the Delsarte picture; the standard inner
product on flat words is then ``tr(A B^T)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .algebra.chainring import Submodule, enumerate_submodules, zinverse
from .algebra.enumeration import count_subspaces
from .algebra.lattice import SubspaceLattice
from .algebra.linalg import BilinearForm, Subspace, combine, matmul, rank, transpose, unit
from .algebra.rings import RingSpec
from .demimatroid import DemiMatroid, validate, weights_profiles_poset
from .demipolymatroid import (
    DemiPolymatroid,
    SubspaceFamily,
    cor51_verdicts,
    validate_polymatroid,
    weights_profiles,
)
from .errors import DEFAULT_CAP, CapExceeded, HypothesisViolation, InputError
from .galois import partition_verdict, reflection_verdict, weight_partition
from .posets import dual_poset, generated_ideal, popcount
from .report import Report, Verdict


def flatten_matrix(mat):
    """w x m matrix -> flat word, column by column."""
    return tuple(x for col in zip(*mat) for x in col)


def unflatten(word, w_dim):
    m = len(word) // w_dim
    return tuple(tuple(word[e * w_dim + i] for e in range(m)) for i in range(w_dim))


def _as_word(row, w_dim, m):
    if row and isinstance(row[0], (list, tuple)):
        if len(row) != w_dim or any(len(r) != m for r in row):
            raise InputError(f"matrix codeword must be {w_dim} x {m}")
        return flatten_matrix(row)
    if len(row) != w_dim * m:
        raise InputError(f"flat codeword must have length {w_dim * m}")
    return tuple(row)


def alternating(values):
    return sum(v if i % 2 == 0 else -v for i, v in enumerate(values))


@dataclass(frozen=True, eq=False)
class CodeFlagFamily:
    ring: RingSpec
    w_dim: int
    m: int
    flags: tuple[tuple[Subspace, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "flags", tuple(tuple(f) for f in self.flags))
        if self.w_dim < 1 or self.m < 1:
            raise InputError("need w_dim >= 1 and m >= 1")
        if not self.flags or any(not f for f in self.flags):
            raise InputError("need at least one nonempty flag")
        for l, flag in enumerate(self.flags):
            for code in flag:
                if code.n != self.n or code.ring != self.ring:
                    raise InputError(f"flag {l} has a code outside the ambient space")
            for i in range(len(flag) - 1):
                if not flag[i + 1] <= flag[i]:
                    raise InputError(f"flag {l} does not descend at position {i + 2}")

    @classmethod
    def from_generators(cls, ring, w_dim, m, flags):
        built = []
        for flag in flags:
            built.append(
                tuple(Subspace.span(ring, w_dim * m, [_as_word(r, w_dim, m) for r in gen]) for gen in flag)
            )
        return cls(ring, w_dim, m, tuple(built))

    @classmethod
    def single(cls, code: Subspace, w_dim=1):
        return cls(code.ring, w_dim, code.n // w_dim, ((code,),))

    @property
    def n(self):
        return self.w_dim * self.m

    @property
    def lengths(self):
        return [len(f) for f in self.flags]

    @property
    def alternating_sums(self):
        return [alternating([c.dim for c in flag]) for flag in self.flags]

    @property
    def k(self):
        return max(self.alternating_sums)

    def common_k(self):
        sums = self.alternating_sums
        if len(set(sums)) != 1:
            return Verdict.failed("alternating sums differ", {"sums": sums})
        return Verdict.passed()

    def odd_lengths(self):
        even = [l for l, u in enumerate(self.lengths) if u % 2 == 0]
        if even:
            return Verdict.failed("flag of even length", {"flag": even[0], "length": self.lengths[even[0]]})
        return Verdict.passed()

    # --- coordinate subspaces -------------------------------------------
    def delta(self, mask):
        w = self.w_dim
        return Subspace(self.ring, self.n, tuple(unit(self.n, e * w + i) for e in range(self.m) if mask >> e & 1 for i in range(w)))

    def power(self, space: Subspace):
        """W^E: words whose every block lies in W."""
        if space.n != self.w_dim:
            raise InputError("subspace of M expected")
        rows = []
        for e in range(self.m):
            for b in space.basis:
                v = [0] * self.n
                v[e * self.w_dim : (e + 1) * self.w_dim] = b
                rows.append(tuple(v))
        return Subspace.span(self.ring, self.n, rows)

    # --- rank functions ---------------------------------------------------
    def f0(self, space: Subspace):
        if space.n != self.n:
            raise InputError("ambient mismatch")
        return max(alternating([(c & space).dim for c in flag]) for flag in self.flags)

    def _restricted_dim(self, code, keep_cols):
        """dim of {c in code : c vanishes outside keep_cols}."""
        if not code.dim:
            return 0
        cols = list(zip(*code.basis))
        outside = [cols[i] for i in range(self.n) if i not in keep_cols]
        return code.dim - (rank(self.ring, outside) if outside else 0)

    def f1(self, mask):
        w = self.w_dim
        keep = {e * w + i for e in range(self.m) if mask >> e & 1 for i in range(w)}
        return max(alternating([self._restricted_dim(c, keep) for c in flag]) for flag in self.flags)

    @cached_property
    def f1_table(self):
        return tuple(self.f1(mask) for mask in range(1 << self.m))

    def f2(self, space: Subspace):
        """dim(C & W^E) through the parity checks of W on every block."""
        checks = space.annihilator().basis
        w = self.w_dim

        def inside(code):
            if not code.dim or not checks:
                return code.dim
            syndromes = []
            for word in code.basis:
                row = []
                for e in range(self.m):
                    block = word[e * w : (e + 1) * w]
                    row.extend(matmul(self.ring, (block,), transpose(checks))[0])
                syndromes.append(tuple(row))
            return code.dim - rank(self.ring, syndromes)

        return max(alternating([inside(c) for c in flag]) for flag in self.flags)

    def to_json(self):
        return {
            "ring": self.ring.to_json(),
            "w_dim": self.w_dim,
            "m": self.m,
            "flags": [[c.to_json() for c in flag] for flag in self.flags],
        }


def f1_demimatroid(flags: CodeFlagFamily):
    return DemiMatroid(flags.m, flags.w_dim, flags.f1_table)


def f2_polymatroid(flags: CodeFlagFamily, lattice=None):
    lattice = lattice or SubspaceLattice(flags.ring, flags.w_dim)
    return DemiPolymatroid(lattice, flags.m, tuple(flags.f2(s) for s in lattice.spaces))


def f0_polymatroid(flags: CodeFlagFamily, lattice=None):
    lattice = lattice or SubspaceLattice(flags.ring, flags.n)
    return DemiPolymatroid(lattice, 1, tuple(flags.f0(s) for s in lattice.spaces))


def consistency_report(flags: CodeFlagFamily, lattice_m=None):
    """f1 and f2 by their fast routes against f0 on delta(J) and W^E."""
    report = Report("rank function consistency")
    bad = next((mask for mask in range(1 << flags.m) if flags.f1(mask) != flags.f0(flags.delta(mask))), None)
    report.add("prop61.f1_matches_f0", bad is None, bad)
    lattice_m = lattice_m or SubspaceLattice(flags.ring, flags.w_dim)
    bad = next((s.to_json() for s in lattice_m.spaces if flags.f2(s) != flags.f0(flags.power(s))), None)
    report.add("prop61.f2_matches_f0", bad is None, bad)
    return report


def prop61_report(flags: CodeFlagFamily, full_lattice_limit=3000):
    report = Report("induced structures")
    k = flags.k
    dm = f1_demimatroid(flags)
    report.add("prop61.f1", validate(dm))
    report.add("prop61.f1_total", dm.k == k)
    dp2 = f2_polymatroid(flags)
    report.add("prop61.f2", validate_polymatroid(dp2))
    report.add("prop61.f2_total", dp2.k == k)
    if count_subspaces(flags.n, flags.ring.order) <= full_lattice_limit:
        dp0 = f0_polymatroid(flags)
        report.add("prop61.f0", validate_polymatroid(dp0))
        report.add("prop61.f0_total", dp0.k == k)
    report.extend(consistency_report(flags, dp2.lattice))
    return report


# --- weights for the three metrics -----------------------------------------


def gr_weights(flags, fam: SubspaceFamily | None = None):
    lattice = fam.lattice if fam is not None else SubspaceLattice(flags.ring, flags.n)
    fam = fam or SubspaceFamily.full(lattice)
    return weights_profiles(f0_polymatroid(flags, lattice), fam)


def poset_weights(flags, p):
    return weights_profiles_poset(f1_demimatroid(flags), p)


def delsarte_weights(flags, fam: SubspaceFamily | None = None):
    lattice = fam.lattice if fam is not None else SubspaceLattice(flags.ring, flags.w_dim)
    fam = fam or SubspaceFamily.full(lattice)
    return weights_profiles(f2_polymatroid(flags, lattice), fam)


def min_rank_distance(code: Subspace, w_dim):
    """Smallest matrix rank of a nonzero codeword."""
    best = None
    for word in code.elements():
        if any(word):
            r = rank(code.ring, unflatten(word, w_dim))
            best = r if best is None else min(best, r)
    return best


# --- duality ---------------------------------------------------------------


def dual_flags(flags: CodeFlagFamily, form: BilinearForm | None = None):
    """D(l, j) = C(l, u + 1 - j)^perp; needs odd lengths and a common k."""
    verdict = flags.odd_lengths()
    if not verdict:
        from .anchors import anchor_for

        raise HypothesisViolation(
            f"{verdict.reason}: {anchor_for('remark71.odd_length')} requires odd flag lengths",
            "remark71.odd_length",
            verdict.witness,
        )
    verdict = flags.common_k()
    if not verdict:
        raise HypothesisViolation(verdict.reason, "flags.common_k", verdict.witness)
    form = form or BilinearForm.standard(flags.ring, flags.n)
    dual = tuple(tuple(form.right_perp(c) for c in reversed(flag)) for flag in flags.flags)
    return CodeFlagFamily(flags.ring, flags.w_dim, flags.m, dual)


def lemma71_verdict(flags, dual, spaces, form=None):
    """Alternating sums of the dual flags, and the per-subspace difference identity."""
    form = form or BilinearForm.standard(flags.ring, flags.n)
    k, total = flags.k, flags.w_dim * flags.m
    for l, flag in enumerate(dual.flags):
        if alternating([c.dim for c in flag]) != total - k:
            return Verdict.failed("dual alternating sum is not wm - k", {"flag": l})
    for space in spaces:
        left = form.left_perp(space)
        for l, (cflag, dflag) in enumerate(zip(flags.flags, dual.flags)):
            lhs = alternating([(d & space).dim for d in dflag]) - alternating([(c & left).dim for c in cflag])
            if lhs != space.dim - k:
                return Verdict.failed("difference identity fails", {"flag": l, "V": space.to_json()})
    return Verdict.passed()


def _partition_tables(report, pair1, pair2, parts):
    report.tables.update(
        d=list(pair1.phi), K=list(pair1.psi), dual_d=list(pair2.phi), dual_K=list(pair2.psi),
        partition=[{"gamma": g, "A": sorted(a), "B": sorted(b)} for g, (a, b) in enumerate(parts)],
    )


def theorem71_report(flags, fam: SubspaceFamily | None = None, form=None):
    """Gabidulin-Roth duality over a family of subspaces of M^E."""
    dual = dual_flags(flags, form)
    lattice = fam.lattice if fam is not None else SubspaceLattice(flags.ring, flags.n)
    fam = fam or SubspaceFamily.full(lattice)
    theta = fam.perp(form)
    k, n = flags.k, flags.n
    report = Report("Gabidulin-Roth duality")
    f0 = f0_polymatroid(flags, lattice)
    h0 = f0_polymatroid(dual, lattice)
    left = lattice.left_perp_map(form)
    bad = next((i for i in range(len(lattice)) if h0.f[i] != f0.f[left[i]] + lattice.dims[i] - k), None)
    report.add("prop71.h0", bad is None, None if bad is None else lattice[bad].to_json())
    report.add("lemma71", lemma71_verdict(flags, dual, [lattice[i] for i in sorted(theta.members)], form))
    pair1 = weights_profiles(f0, fam)
    pair2 = weights_profiles(h0, theta)
    report.add("t71.identity", reflection_verdict(pair1, pair2.psi, 1))
    parts = weight_partition(pair1.phi, pair2.phi, 1, k, n)
    report.add("t71.partition", partition_verdict(parts, n))
    _partition_tables(report, pair1, pair2, parts)
    report.tables["perp_closed"] = theta == fam
    return report


def theorem72_report(flags, p, form=None):
    """Poset-metric duality through the induced w-demi-matroids."""
    dual = dual_flags(flags, form)
    k, m, w = flags.k, flags.m, flags.w_dim
    f1 = f1_demimatroid(flags)
    h1 = f1_demimatroid(dual)
    full = (1 << m) - 1
    report = Report("poset-metric duality")
    bad = next((j for j in range(1 << m) if h1.f[j] != f1.f[full ^ j] + w * popcount(j) - k), None)
    report.add("prop71.h1", bad is None, bad)
    pair1 = weights_profiles_poset(f1, p)
    pair2 = weights_profiles_poset(h1, dual_poset(p))
    report.add("t72.identity", reflection_verdict(pair1, pair2.psi, w))
    parts = weight_partition(pair1.phi, pair2.phi, w, k, m)
    report.add("t72.partition", partition_verdict(parts, m))
    _partition_tables(report, pair1, pair2, parts)
    return report


def theorem73_report(flags, fam: SubspaceFamily | None = None, form=None):
    """Delsarte duality through the induced m-demi-polymatroids on M."""
    dual = dual_flags(flags, form)
    k, m, w = flags.k, flags.m, flags.w_dim
    lattice = fam.lattice if fam is not None else SubspaceLattice(flags.ring, w)
    fam = fam or SubspaceFamily.full(lattice)
    f2 = f2_polymatroid(flags, lattice)
    h2 = f2_polymatroid(dual, lattice)
    left = lattice.left_perp_map()
    report = Report("Delsarte duality")
    bad = next((i for i in range(len(lattice)) if h2.f[i] != f2.f[left[i]] + m * lattice.dims[i] - k), None)
    report.add("prop71.h2", bad is None, None if bad is None else lattice[bad].to_json())
    pair1 = weights_profiles(f2, fam)
    pair2 = weights_profiles(h2, fam.perp())
    for side, pair in (("code", pair1), ("dual", pair2)):
        for name, verdict in cor51_verdicts(pair, m).items():
            report.add(f"{name}.{side}", verdict)
    report.add("t73.identity", reflection_verdict(pair1, pair2.psi, m))
    parts = weight_partition(pair1.phi, pair2.phi, m, k, w)
    report.add("t73.partition", partition_verdict(parts, w))
    _partition_tables(report, pair1, pair2, parts)
    return report


def duality_reports(flags, metric, context=None, form=None):
    if metric == "gr":
        return theorem71_report(flags, context, form)
    if metric == "poset":
        return theorem72_report(flags, context, form)
    if metric == "delsarte":
        return theorem73_report(flags, context, form)
    raise InputError(f"unknown metric {metric!r}")


# --- random flags ------------------------------------------------------------


def random_subspace(rng, ring, ambient: Subspace, d):
    """Uniformly drawn coefficients, redrawn until the span has dimension d."""
    q = ring.order
    while True:
        coeffs = [[rng.randint(0, q - 1) for _ in range(ambient.dim)] for _ in range(d)]
        rows = [combine(ring, c, ambient.basis, ambient.n) for c in coeffs]
        space = Subspace.span(ring, ambient.n, rows)
        if space.dim == d:
            return space


def random_flag(rng, ring, n, u, k):
    """Descending codes of length u (1 or 3) with alternating dimension sum k."""
    full = Subspace.full(ring, n)
    if u == 1:
        return (random_subspace(rng, ring, full, k),)
    if u != 3:
        raise InputError("random flags have length 1 or 3")
    d3 = rng.randint(0, k)
    d2 = rng.randint(d3, n - k + d3)
    d1 = k + d2 - d3
    c1 = random_subspace(rng, ring, full, d1)
    c2 = random_subspace(rng, ring, c1, d2)
    c3 = random_subspace(rng, ring, c2, d3)
    return (c1, c2, c3)


def random_flag_family(rng, ring, w_dim, m, lengths=(1, 3), count=1, k=None):
    n = w_dim * m
    k = rng.randint(0, n) if k is None else k
    flags = [random_flag(rng, ring, n, rng.choice(list(lengths)), k) for _ in range(count)]
    return CodeFlagFamily(ring, w_dim, m, tuple(flags))


# --- chain-ring codes ----------------------------------------------------------


@dataclass(frozen=True)
class ChainRingCode:
    ring: RingSpec
    m: int
    code: Submodule
    side: str = "right"

    @classmethod
    def from_rows(cls, ring, rows, m=None):
        rows = [tuple(r) for r in rows]
        m = m if m is not None else len(rows[0])
        return cls(ring, m, Submodule.span(ring, m, rows))

    @property
    def t(self):
        return self.code.rank

    def to_json(self):
        return {"ring": self.ring.to_json(), "m": self.m, "generator": self.code.to_json()}


def _delta_module(ring, m, mask):
    return Submodule.span(ring, m, [tuple(int(i == e) for i in range(m)) for e in range(m) if mask >> e & 1])


def rank_demimatroid(module: Submodule):
    """f(J) = rank(C & delta(J))."""
    m = module.n
    return DemiMatroid(m, 1, tuple((module & _delta_module(module.ring, m, mask)).rank for mask in range(1 << m)))


def ghwr_weights(code: ChainRingCode, p):
    dm = rank_demimatroid(code.code)
    verdict = validate(dm)
    if not verdict:
        raise HypothesisViolation(f"rank table is not a demi-matroid: {verdict.reason}", "prop72", verdict.witness)
    return weights_profiles_poset(dm, p)


def subcode_weights(code: ChainRingCode, p, cap=DEFAULT_CAP, subcodes=None):
    """min |<chi(D)>_P| over submodules D of C of each rank."""
    best = [None] * (code.t + 1)
    for sub in subcodes if subcodes is not None else enumerate_submodules(code.code, cap):
        size = popcount(generated_ideal(p, sub.support()))
        r = sub.rank
        if best[r] is None or size < best[r]:
            best[r] = size
    return best


def free_closures(module: Submodule, limit=2):
    """Free submodules of the same rank containing ``module``.

    The first lifts the Smith-form generators p^b v_i to v_i; further ones
    add p^(s-b) e_j to a lifted row, which keeps it a lift of the same
    generator.
    """
    ring, n = module.ring, module.n
    p, s, mod = ring.p, ring.s, ring.order
    diag, _, v = module.smith
    vinv = zinverse(ring, v)
    lifted = [list(vinv[i]) for i in range(len(diag))]
    base = Submodule.span(ring, n, [tuple(r) for r in lifted])
    found = [base]
    for i, d in enumerate(diag):
        b = 0
        while d % p**(b + 1) == 0 and b + 1 <= s:
            b += 1
        if b == 0:
            continue
        for j in range(n):
            if len(found) >= limit:
                return found
            rows = [r[:] for r in lifted]
            rows[i][j] = (rows[i][j] + p ** (s - b)) % mod
            alt = Submodule.span(ring, n, [tuple(r) for r in rows])
            if all(alt.key() != f.key() for f in found):
                found.append(alt)
    return found


def closure_verdict(module, closure):
    if not closure.is_free():
        return Verdict.failed("closure is not free", closure.to_json())
    if closure.rank != module.rank:
        return Verdict.failed("closure rank differs", {"rank": closure.rank, "t": module.rank})
    if not module <= closure:
        return Verdict.failed("closure does not contain the code", closure.to_json())
    return Verdict.passed()


def theorem74_report(code: ChainRingCode, p, closure: Submodule | None = None, subcode_cap=DEFAULT_CAP, nested=False, subcodes=None):
    ring, m, t = code.ring, code.m, code.t
    closures = free_closures(code.code)
    closure = closure or closures[0]
    perp = BilinearForm.standard(ring, m).left_perp(closure)
    report = Report("chain-ring duality")
    report.add("t74.closure", closure_verdict(code.code, closure))
    report.add("t74.closure_perp", perp.is_free() and perp.rank == m - t, perp.to_json())

    f_c = rank_demimatroid(code.code)
    f_m = rank_demimatroid(closure)
    h = rank_demimatroid(perp)
    report.add("prop72.code", validate(f_c))
    report.add("prop72.total", f_c.k == t)
    full = (1 << m) - 1
    bad = next((j for j in range(1 << m) if h.f[j] != f_m.f[full ^ j] + popcount(j) - t), None)
    report.add("prop73", bad is None, bad)

    pair_c = weights_profiles_poset(f_c, p)
    pair_m = weights_profiles_poset(f_m, p)
    pair_h = weights_profiles_poset(h, dual_poset(p))
    report.add("t74.weights", list(pair_c.phi) == list(pair_m.phi), {"C": list(pair_c.phi), "M": list(pair_m.phi)})
    report.add("t74.profiles", list(pair_c.psi) == list(pair_m.psi), {"C": list(pair_c.psi), "M": list(pair_m.psi)})
    report.add("t74.identity", reflection_verdict(pair_c, pair_h.psi, 1))
    parts = weight_partition(pair_c.phi, pair_h.phi, 1, t, m)
    report.add("t74.partition", partition_verdict(parts, m))
    if not nested:
        try:
            sub = subcode_weights(code, p, subcode_cap, subcodes)
            report.add("lemma72", sub == list(pair_c.phi), {"subcodes": sub, "weights": list(pair_c.phi)})
        except CapExceeded:
            report.tables["lemma72_skipped"] = True
    if not nested and len(closures) > 1:
        other = closures[1] if closure.key() == closures[0].key() else closures[0]
        alt = theorem74_report(code, p, other, nested=True)
        report.add("t74.closure_independent", alt.passed and alt.tables["d"] == list(pair_c.phi), alt.tables["d"])
        report.tables["closures"] = [closure.to_json(), other.to_json()]
    report.tables.update(
        t=t, closure=closure.to_json(), closure_perp=perp.to_json(),
        d=list(pair_c.phi), K=list(pair_c.psi), dual_d=list(pair_h.phi), dual_K=list(pair_h.psi),
        partition=[{"gamma": g, "A": sorted(a), "B": sorted(b)} for g, (a, b) in enumerate(parts)],
    )
    return report
