"""Galois connections between integer intervals [0, k] and [0, m].

A pair ``(phi, psi)`` with ``phi: [0, k] -> [0, m]`` and
``psi: [0, m] -> [0, k]`` is a Galois connection when both maps are
monotone and ``a <= psi(b)`` exactly when ``phi(a) <= b``.  Generalized
weights and profiles are always such pairs, and the duality theorems are
statements about two of them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import HypothesisViolation, InputError
from .report import Report, Verdict

TABLE_CAP = 64


@dataclass(frozen=True)
class MonotoneTable:
    """Integer table on ``[0, domain_max]`` with values in ``[0, codomain_max]``.

    Monotonicity is not enforced here so that broken tables can still be
    handed to :func:`check_galois_pair` and rejected there.
    """

    values: tuple[int, ...]
    codomain_max: int

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", values)
        if not values:
            raise InputError("a table needs at least the value at 0")
        if len(values) - 1 > TABLE_CAP or self.codomain_max > TABLE_CAP:
            raise InputError(f"table bounds exceed the cap {TABLE_CAP}")
        if self.codomain_max < 0:
            raise InputError("negative codomain bound")
        bad = [i for i, v in enumerate(values) if not 0 <= v <= self.codomain_max]
        if bad:
            raise InputError(f"value {values[bad[0]]} at {bad[0]} outside [0, {self.codomain_max}]")

    @classmethod
    def of(cls, values, codomain_max=None):
        values = tuple(values)
        if codomain_max is None:
            codomain_max = max(values) if values else 0
        return cls(values, codomain_max)

    @property
    def domain_max(self):
        return len(self.values) - 1

    def __getitem__(self, i):
        return self.values[i]

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def first_descent(self):
        for i in range(len(self.values) - 1):
            if self.values[i] > self.values[i + 1]:
                return i
        return None

    def is_monotone(self):
        return self.first_descent() is None

    def steps(self):
        return [b - a for a, b in zip(self.values, self.values[1:])]

    def to_json(self):
        return list(self.values)


def _as_table(table, codomain_max):
    if isinstance(table, MonotoneTable):
        return table
    return MonotoneTable(tuple(table), codomain_max)


def check_galois_pair(phi, psi):
    """Verdict on monotonicity plus the adjunction over all pairs.

    Plain sequences are accepted; their codomains are then read off the
    other table's length.
    """
    if not isinstance(phi, MonotoneTable):
        phi = MonotoneTable(tuple(phi), len(psi) - 1)
    if not isinstance(psi, MonotoneTable):
        psi = MonotoneTable(tuple(psi), len(phi) - 1)
    if phi.codomain_max != psi.domain_max or psi.codomain_max != phi.domain_max:
        raise InputError(
            f"bound mismatch: phi is [0,{phi.domain_max}]->[0,{phi.codomain_max}], "
            f"psi is [0,{psi.domain_max}]->[0,{psi.codomain_max}]"
        )
    for name, t in (("phi", phi), ("psi", psi)):
        i = t.first_descent()
        if i is not None:
            return Verdict.failed(f"{name} decreases", {"table": name, "at": i})
    for a in range(phi.domain_max + 1):
        for b in range(psi.domain_max + 1):
            if (a <= psi[b]) != (phi[a] <= b):
                return Verdict.failed("adjunction fails", {"a": a, "b": b})
    return Verdict.passed()


def adjoint_of(table, side):
    """The other leg of a Galois connection.

    ``side="right"``: ``table`` is psi on [0, m] with codomain [0, k];
    returns phi(a) = min{b : a <= psi(b)}.
    ``side="left"``: ``table`` is phi on [0, k] with codomain [0, m];
    returns psi(b) = max{a : phi(a) <= b}.
    """
    if not isinstance(table, MonotoneTable):
        table = MonotoneTable.of(table)
    if not table.is_monotone():
        raise InputError(f"table decreases at {table.first_descent()}")
    if side == "right":
        k, m = table.codomain_max, table.domain_max
        if table[m] < k:
            raise HypothesisViolation(f"no b with {k} <= psi(b)", "adjoint.reachable", k)
        values = []
        b = 0
        for a in range(k + 1):
            while table[b] < a:
                b += 1
            values.append(b)
        return MonotoneTable(tuple(values), m)
    if side == "left":
        m, k = table.codomain_max, table.domain_max
        if table[0] > 0:
            raise HypothesisViolation("no a with phi(a) <= 0", "adjoint.reachable", 0)
        values = []
        a = 0
        for b in range(m + 1):
            while a < k and table[a + 1] <= b:
                a += 1
            values.append(a)
        return MonotoneTable(tuple(values), k)
    raise InputError(f"side must be 'left' or 'right', not {side!r}")


@dataclass(frozen=True)
class GaloisPair:
    phi: MonotoneTable
    psi: MonotoneTable

    def __post_init__(self):
        verdict = check_galois_pair(self.phi, self.psi)
        if not verdict:
            raise HypothesisViolation(f"not a Galois connection: {verdict.reason}", "galois_pair", verdict.witness)

    @classmethod
    def from_tables(cls, phi, psi):
        phi, psi = tuple(phi), tuple(psi)
        return cls(MonotoneTable(phi, len(psi) - 1), MonotoneTable(psi, len(phi) - 1))

    @classmethod
    def from_psi(cls, psi, k=None):
        psi = MonotoneTable.of(psi, k)
        return cls(adjoint_of(psi, "right"), psi)

    @classmethod
    def from_phi(cls, phi, m=None):
        phi = MonotoneTable.of(phi, m)
        return cls(phi, adjoint_of(phi, "left"))

    @property
    def k(self):
        return self.phi.domain_max

    @property
    def m(self):
        return self.psi.domain_max

    def to_json(self):
        return {"phi": list(self.phi), "psi": list(self.psi)}


def pair_from_maps(points, k, m):
    """Galois pair built from ``(g(u), f(u))`` values over some finite set.

    phi(a) = min{g(u) : a <= f(u)} and psi(b) = max{f(u) : g(u) <= b}.
    Needs some u with f(u) = k and some u with g(u) = 0.
    """
    points = list(points)
    if any(not 0 <= g <= m or not 0 <= f <= k for g, f in points):
        raise HypothesisViolation("values outside [0, m] x [0, k]", "lemma22")
    if not any(f == k for _, f in points):
        raise HypothesisViolation(f"no element reaches f = {k}", "lemma22", k)
    if not any(g == 0 for g, _ in points):
        raise HypothesisViolation("no element has g = 0", "lemma22", 0)
    phi = [min(g for g, f in points if a <= f) for a in range(k + 1)]
    psi = [max(f for g, f in points if g <= b) for b in range(m + 1)]
    return GaloisPair(MonotoneTable(tuple(phi), m), MonotoneTable(tuple(psi), k))


def level_maxima(points, m):
    """max{f(u) : g(u) = b} for each b, or None for an empty level."""
    best = [None] * (m + 1)
    for g, f in points:
        if best[g] is None or f > best[g]:
            best[g] = f
    return best


def fiber_of(pair: GaloisPair, d):
    """``{a : phi(a) = d}`` as a range (possibly empty)."""
    if not 0 <= d <= pair.m:
        raise InputError(f"d={d} outside [0, {pair.m}]")
    psi = pair.psi
    if d == 0:
        return range(0, psi[0] + 1)
    return range(psi[d - 1] + 1, psi[d] + 1)


def dual_hypotheses(pair: GaloisPair, w):
    """psi(0) = 0 and every psi step at most w."""
    if pair.psi[0] != 0:
        return Verdict.failed("psi(0) != 0", {"l": 0, "psi": pair.psi[0]})
    for l, step in enumerate(pair.psi.steps(), start=1):
        if step > w:
            return Verdict.failed(f"psi step exceeds w={w}", {"l": l, "step": step})
    return Verdict.passed()


def reflected_profile(pair: GaloisPair, w):
    """eta(l) = psi(m - l) + w l - k."""
    m, k = pair.m, pair.k
    return [pair.psi[m - l] + w * l - k for l in range(m + 1)]


def dual_connection(pair: GaloisPair, w):
    """The pair (tau, eta) between [0, wm - k] and [0, m]."""
    if w < 1:
        raise InputError("w must be positive")
    verdict = dual_hypotheses(pair, w)
    if not verdict:
        raise HypothesisViolation(verdict.reason, "dual_connection", verdict.witness)
    eta = MonotoneTable(tuple(reflected_profile(pair, w)), w * pair.m - pair.k)
    return GaloisPair(adjoint_of(eta, "right"), eta)


@dataclass(frozen=True)
class StepStatements:
    """Truth values of the four equivalent step conditions.

    ``phi_gap`` is None unless psi(0) = 0.
    """

    psi_step: bool
    fiber_size: bool
    phi_gap_capped: bool
    phi_gap: bool | None
    phi_positive: bool | None

    @property
    def values(self):
        return (self.psi_step, self.fiber_size, self.phi_gap_capped, self.phi_gap)

    @property
    def consistent(self):
        core = {self.psi_step, self.fiber_size, self.phi_gap_capped}
        if len(core) != 1:
            return False
        if self.phi_gap is not None and self.phi_gap != self.psi_step:
            return False
        return self.phi_positive is not False

    def to_report(self, title="step conditions"):
        report = Report(title)
        report.add("steps.agree", self.consistent, {"values": list(self.values)})
        report.tables["statements"] = list(self.values)
        return report


def step_equivalences(pair: GaloisPair, w):
    k, m = pair.k, pair.m
    phi, psi = pair.phi, pair.psi
    psi_step = all(s <= w for s in psi.steps())
    fiber_size = all(len(fiber_of(pair, l)) <= w for l in range(1, m + 1))
    gaps = range(0, k - w + 1)
    capped = all(phi[r] + 1 <= max(phi[r + w], 1) for r in gaps)
    plain = positive = None
    if psi[0] == 0:
        plain = all(phi[r] + 1 <= phi[r + w] for r in gaps)
        positive = all(1 <= phi[a] <= m for a in range(1, k + 1))
    return StepStatements(psi_step, fiber_size, capped, plain, positive)


def residue_sets(gamma, w, k, m):
    """U = {u in [1,k] : u = gamma + k mod w}, V = {v in [1,wm-k] : v = gamma mod w}."""
    if w < 1:
        raise InputError("w must be positive")
    if w * m < k:
        raise InputError(f"w*m = {w * m} < k = {k}")
    us = frozenset(u for u in range(1, k + 1) if (u - gamma - k) % w == 0)
    vs = frozenset(v for v in range(1, w * m - k + 1) if (v - gamma) % w == 0)
    return us, vs


def weight_partition(phi, tau, w, k, m):
    """For each gamma in [0, w): (A, B) with A from phi and B from tau."""
    out = []
    for gamma in range(w):
        us, vs = residue_sets(gamma, w, k, m)
        a_set = frozenset(phi[u] for u in us)
        b_set = frozenset(m + 1 - tau[v] for v in vs)
        out.append((a_set, b_set))
    return out


def partition_verdict(parts, m, union_only=False):
    """Disjoint cover of [1, m] by every (A, B) residue pair."""
    target = frozenset(range(1, m + 1))
    for gamma, (a_set, b_set) in enumerate(parts):
        if not union_only and a_set & b_set:
            return Verdict.failed("A and B overlap", {"gamma": gamma, "common": sorted(a_set & b_set)})
        if a_set | b_set != target:
            return Verdict.failed(
                "A and B do not cover [1, m]",
                {"gamma": gamma, "A": sorted(a_set), "B": sorted(b_set), "missing": sorted(target - (a_set | b_set))},
            )
    return Verdict.passed()


def reflection_verdict(pair1, eta, w):
    """eta(l) = psi(m - l) + w l - k at every l; witness is the first l that differs."""
    expected = reflected_profile(pair1, w)
    for l, (got, want) in enumerate(zip(eta, expected)):
        if got != want:
            return Verdict.failed("reflected profile differs", {"l": l, "eta": got, "expected": want})
    return Verdict.passed()


def _check_central_bounds(pair1, pair2, w):
    verdict = dual_hypotheses(pair1, w)
    if not verdict:
        raise HypothesisViolation(verdict.reason, "t22", verdict.witness)
    if pair2.m != pair1.m or pair2.k != w * pair1.m - pair1.k:
        raise InputError(
            f"second pair must connect [0,{w * pair1.m - pair1.k}] and [0,{pair1.m}], "
            f"got [0,{pair2.k}] and [0,{pair2.m}]"
        )


def central_statements(pair1: GaloisPair, pair2: GaloisPair, w):
    """Verdicts for the four equivalent statements of the central theorem."""
    _check_central_bounds(pair1, pair2, w)
    k, m = pair1.k, pair1.m
    phi, tau, eta = pair1.phi, pair2.phi, pair2.psi

    s1 = reflection_verdict(pair1, eta, w)

    s2 = Verdict.passed()
    if eta[0] != 0:
        s2 = Verdict.failed("eta(0) != 0", {"eta0": eta[0]})
    else:
        bad = next((l for l, s in enumerate(eta.steps(), start=1) if s > w), None)
        if bad is not None:
            s2 = Verdict.failed(f"eta step exceeds w={w}", {"l": bad})
        else:
            for u in range(1, k + 1):
                hit = next(
                    (v for v in range(1, w * m - k + 1) if phi[u] + tau[v] == m + 1 and (u - v - k) % w == 0),
                    None,
                )
                if hit is not None:
                    s2 = Verdict.failed("congruent pair on the reflection line", {"u": u, "v": hit})
                    break

    parts = weight_partition(phi, tau, w, k, m)
    s3 = partition_verdict(parts, m)
    s4 = partition_verdict(parts, m, union_only=True)
    return (s1, s2, s3, s4), parts


def central_theorem_report(pair1: GaloisPair, pair2: GaloisPair, w, prefix="t22"):
    statements, parts = central_statements(pair1, pair2, w)
    report = Report("central theorem")
    for i, verdict in enumerate(statements, start=1):
        report.add(f"{prefix}.s{i}", verdict)
    values = [bool(s) for s in statements]
    report.tables["statements"] = values
    report.tables["partition"] = [
        {"gamma": g, "A": sorted(a_set), "B": sorted(b_set)} for g, (a_set, b_set) in enumerate(parts)
    ]
    report.tables["equivalent"] = len(set(values)) == 1
    return report


# --- bridging constructions ---------------------------------------------


@dataclass(frozen=True)
class BridgeTuple:
    """Explicit data (Y, m, g, w, k, f, X, sigma).

    ``g`` and ``f`` are indexed by position in ``y_elems``; ``sigma`` maps
    each position of ``x_elems`` to a position in ``y_elems``.
    """

    y_elems: tuple
    g: tuple[int, ...]
    f: tuple[int, ...]
    x_elems: tuple
    sigma: tuple[int, ...]
    w: int
    m: int
    k: int

    def __post_init__(self):
        for name in ("y_elems", "g", "f", "x_elems", "sigma"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        if not self.y_elems or not self.x_elems:
            raise InputError("Y and X must be nonempty")
        if len(self.g) != len(self.y_elems) or len(self.f) != len(self.y_elems):
            raise InputError("g and f must list one value per element of Y")
        if len(self.sigma) != len(self.x_elems):
            raise InputError("sigma must list one image per element of X")
        if self.w < 1 or self.m < 0 or self.k < 0:
            raise InputError("need w >= 1 and m, k >= 0")

    def structural_failure(self):
        """Range and surjectivity problems, before the four conditions."""
        if set(self.g) != set(range(self.m + 1)):
            return "g is not onto [0, m]"
        if any(not 0 <= v <= self.k for v in self.f):
            return "f leaves [0, k]"
        if set(self.sigma) != set(range(len(self.y_elems))):
            return "sigma is not onto Y"
        return None

    def condition_failure(self):
        """(check name, witness) for the first failing condition, or None."""
        g, f, w, m, k = self.g, self.f, self.w, self.m, self.k
        ys = range(len(self.y_elems))
        for y in ys:
            if g[y] == 0 and f[y] != 0:
                return "bridge.zero_level", self.y_elems[y]
        for y in ys:
            if w * g[y] - f[y] > w * m - k:
                return "bridge.slope", self.y_elems[y]
        for u in ys:
            if g[u] <= m - 1 and not any(g[v] == g[u] + 1 and f[u] <= f[v] for v in ys):
                return "bridge.successor", self.y_elems[u]
        for v in ys:
            if g[v] >= 1 and not any(g[u] == g[v] - 1 and f[v] - f[u] <= w for u in ys):
                return "bridge.predecessor", self.y_elems[v]
        return None

    def validate(self):
        problem = self.structural_failure()
        if problem:
            raise InputError(problem)
        failure = self.condition_failure()
        if failure:
            from .anchors import anchor_for

            name, witness = failure
            raise HypothesisViolation(f"tuple violates {name} {anchor_for(name)} at {witness!r}", name, witness)
        return self

    def mu(self):
        return tuple(self.m - self.g[s] for s in self.sigma)

    def h(self):
        w, k = self.w, self.k
        return tuple(self.f[s] + w * mu - k for s, mu in zip(self.sigma, self.mu()))


def bridge_derive(bt: BridgeTuple):
    """Return ``((phi, psi), (tau, eta))`` built from (g, f) and (mu, h)."""
    bt.validate()
    pair1 = pair_from_maps(zip(bt.g, bt.f), bt.k, bt.m)
    pair2 = pair_from_maps(zip(bt.mu(), bt.h()), bt.w * bt.m - bt.k, bt.m)
    return pair1, pair2


def bridge_report(bt: BridgeTuple, prefix="t31"):
    """Every conclusion about the derived maps and both pairs."""
    pair1, pair2 = bridge_derive(bt)
    g, f, w, m, k = bt.g, bt.f, bt.w, bt.m, bt.k
    mu, h = bt.mu(), bt.h()
    ys = range(len(g))
    report = Report("bridge")

    top = [y for y in ys if g[y] == m and f[y] != k]
    report.add("lemma31.top_level", not top, top[:1] or None)
    low = [y for y in ys if f[y] > w * g[y]]
    report.add("lemma31.slope", not low and k <= w * m, low[:1] or None)
    report.add("lemma31.mu_onto", set(mu) == set(range(m + 1)))
    out = [t for t, v in enumerate(h) if not 0 <= v <= w * m - k or (mu[t] == m and v != w * m - k)]
    report.add("lemma31.h_range", not out, out[:1] or None)
    xs = range(len(mu))
    stuck = [c for c in xs if mu[c] <= m - 1 and not any(mu[d] == mu[c] + 1 and h[c] <= h[d] for d in xs)]
    report.add("lemma31.successor", not stuck, stuck[:1] or None)

    report.add("prop31.phi_psi", check_galois_pair(pair1.phi, pair1.psi))
    report.add("prop31.psi_level", list(pair1.psi) == level_maxima(zip(g, f), m))
    report.add("prop31.psi_steps", dual_hypotheses(pair1, w))
    steps = step_equivalences(pair1, w)
    report.add("prop31.phi_gap", bool(steps.phi_gap) and bool(steps.phi_positive))
    report.add("prop31.tau_eta", check_galois_pair(pair2.phi, pair2.psi))
    report.add("prop31.eta_level", list(pair2.psi) == level_maxima(zip(mu, h), m))

    statements, parts = central_statements(pair1, pair2, w)
    report.add(f"{prefix}.identity", statements[0])
    report.add(f"{prefix}.partition", statements[2])
    report.tables.update(
        phi=list(pair1.phi), psi=list(pair1.psi), tau=list(pair2.phi), eta=list(pair2.psi),
        partition=[{"gamma": i, "A": sorted(a), "B": sorted(b)} for i, (a, b) in enumerate(parts)],
    )
    return report


def abundance_bridge_check(size, leq, grade, f, w, sigma, k=None, labels=None):
    """Second bridging construction on a graded order.

    ``size``, ``leq`` and ``grade`` describe the order on ``range(size)``;
    ``f`` is indexed the same way and ``sigma`` maps a list of X positions
    onto it.
    """
    from .posets import is_graded_abundance

    labels = tuple(labels) if labels is not None else tuple(range(size))
    verdict = is_graded_abundance(size, leq, grade)
    if not verdict:
        raise HypothesisViolation(f"not an abundance: {verdict.reason}", verdict.reason, verdict.witness)
    items = range(size)
    bottom = next(x for x in items if all(leq(x, y) for y in items))
    top = next(x for x in items if all(leq(y, x) for y in items))
    m = grade[top]
    if f[bottom] != 0:
        raise HypothesisViolation("f is nonzero at the least element", "t32.f_bounds", labels[bottom])
    if k is not None and f[top] != k:
        raise HypothesisViolation(f"f at the greatest element is {f[top]}, not {k}", "t32.f_bounds", labels[top])
    k = f[top]
    for x in items:
        for y in items:
            if leq(x, y) and not 0 <= f[y] - f[x] <= w * (grade[y] - grade[x]):
                raise HypothesisViolation("increment bound fails", "t32.f_bounds", (labels[x], labels[y]))
    bt = BridgeTuple(labels, tuple(grade), tuple(f), tuple(range(len(sigma))), tuple(sigma), w, m, k)
    return bridge_report(bt, prefix="t32")
