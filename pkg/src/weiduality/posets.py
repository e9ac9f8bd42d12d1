"""Finite posets on [1, n], their ideals, and abundance checks.

Subsets are bitmasks (element i is bit i - 1).  ``Poset.down[i]`` is the
mask of everything below or equal to element ``i + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import CapExceeded, DEFAULT_CAP, InputError
from .report import Verdict


def popcount(mask):
    return bin(mask).count("1")


def mask_of(elements):
    mask = 0
    for e in elements:
        mask |= 1 << (e - 1)
    return mask


def elements_of(mask):
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


@dataclass(frozen=True)
class Poset:
    n: int
    down: tuple[int, ...]

    def __post_init__(self):
        if len(self.down) != self.n:
            raise InputError("relation size does not match n")
        for i, d in enumerate(self.down):
            if not d >> i & 1:
                raise InputError(f"relation is not reflexive at {i + 1}")
            for j in range(self.n):
                if j != i and d >> j & 1 and self.down[j] >> i & 1:
                    raise InputError(f"cycle between {i + 1} and {j + 1}")
                if d >> j & 1 and self.down[j] & ~d:
                    raise InputError(f"relation is not transitive at {j + 1} <= {i + 1}")

    @classmethod
    def from_cover_pairs(cls, n, pairs):
        """Transitive closure of ``a < b`` pairs; rejects cycles."""
        down = [1 << i for i in range(n)]
        for a, b in pairs:
            if not (1 <= a <= n and 1 <= b <= n):
                raise InputError(f"pair {(a, b)} outside [1, {n}]")
            if a == b:
                raise InputError(f"pair {(a, b)} is a loop")
            down[b - 1] |= 1 << (a - 1)
        changed = True
        while changed:
            changed = False
            for i in range(n):
                new = down[i]
                for j in elements_of(down[i]):
                    new |= down[j - 1]
                if new != down[i]:
                    down[i] = new
                    changed = True
        for i in range(n):
            for j in range(n):
                if i != j and down[i] >> j & 1 and down[j] >> i & 1:
                    raise InputError(f"cover pairs contain a cycle through {i + 1} and {j + 1}")
        return cls(n, tuple(down))

    @classmethod
    def antichain(cls, n):
        return cls(n, tuple(1 << i for i in range(n)))

    @classmethod
    def chain(cls, n):
        """1 < 2 < ... < n."""
        return cls(n, tuple((1 << (i + 1)) - 1 for i in range(n)))

    @classmethod
    def v_shape(cls, n):
        """Every element of [1, n - 1] below n."""
        if n < 3:
            raise InputError("the V shape needs at least 3 elements")
        return cls.from_cover_pairs(n, [(i, n) for i in range(1, n)])

    @classmethod
    def named(cls, shape, n):
        makers = {"antichain": cls.antichain, "chain": cls.chain, "v": cls.v_shape}
        if shape not in makers:
            raise InputError(f"unknown poset shape {shape!r}")
        return makers[shape](n)

    def leq(self, a, b):
        return bool(self.down[b - 1] >> (a - 1) & 1)

    @cached_property
    def linear_extension(self):
        return sorted(range(1, self.n + 1), key=lambda e: (popcount(self.down[e - 1]), e))

    def cover_pairs(self):
        pairs = []
        for b in range(1, self.n + 1):
            strict = self.down[b - 1] & ~(1 << (b - 1))
            for a in elements_of(strict):
                between = strict & ~self.down[a - 1] & ~(1 << (a - 1))
                if not any(self.leq(a, c) for c in elements_of(between)):
                    pairs.append((a, b))
        return sorted(pairs)

    def to_json(self):
        return {"n": self.n, "cover_pairs": [list(p) for p in self.cover_pairs()]}


@dataclass(frozen=True)
class SetFamily:
    m: int
    members: frozenset

    def __post_init__(self):
        full = (1 << self.m) - 1
        bad = [b for b in self.members if b < 0 or b & ~full]
        if bad:
            raise InputError(f"member {bad[0]} is not a subset of [1, {self.m}]")

    @classmethod
    def of(cls, m, members):
        return cls(m, frozenset(members))

    @classmethod
    def power_set(cls, m):
        return cls(m, frozenset(range(1 << m)))

    @property
    def full(self):
        return (1 << self.m) - 1

    def __contains__(self, mask):
        return mask in self.members

    def __iter__(self):
        return iter(sorted(self.members))

    def __len__(self):
        return len(self.members)

    def complement(self):
        return SetFamily(self.m, frozenset(self.full ^ b for b in self.members))

    def closure_failure(self):
        """Smallest pair whose union or intersection leaves the family."""
        members = sorted(self.members)
        for i, a in enumerate(members):
            for b in members[i + 1 :]:
                if a | b not in self.members:
                    return ("union", a, b)
                if a & b not in self.members:
                    return ("intersection", a, b)
        return None

    def to_json(self):
        return {"m": self.m, "members": [elements_of(b) for b in sorted(self.members)]}


def ideals(p: Poset, cap=DEFAULT_CAP):
    """All ideals, grown one element at a time along a linear extension."""
    found = [0]
    for e in p.linear_extension:
        below = p.down[e - 1] & ~(1 << (e - 1))
        bit = 1 << (e - 1)
        found += [i | bit for i in found if i & below == below]
        if len(found) > cap:
            raise CapExceeded("ideals", len(found), cap)
    return SetFamily(p.n, frozenset(found))


def generated_ideal(p: Poset, mask):
    out = 0
    for e in elements_of(mask):
        if e > p.n:
            raise InputError(f"element {e} outside [1, {p.n}]")
        out |= p.down[e - 1]
    return out


def dual_poset(p: Poset):
    up = [0] * p.n
    for b in range(p.n):
        for a in elements_of(p.down[b]):
            up[a - 1] |= 1 << b
    return Poset(p.n, tuple(up))


def is_abundance_family(fam: SetFamily):
    """Unit steps up from every proper member and down from every nonempty one."""
    if 0 not in fam:
        return Verdict.failed("empty set missing", 0)
    if fam.full not in fam:
        return Verdict.failed("ground set missing", fam.full)
    for a in sorted(fam.members):
        if a != fam.full:
            if not any(a | (1 << i) in fam for i in range(fam.m) if not a >> i & 1):
                return Verdict.failed("no member one element larger", elements_of(a))
        if a:
            if not any(a & ~(1 << i) in fam for i in range(fam.m) if a >> i & 1):
                return Verdict.failed("no member one element smaller", elements_of(a))
    return Verdict.passed()


def poset_from_family(fam: SetFamily):
    """Rebuild a poset whose ideals are ``fam``, or explain why none exists.

    Returns ``(poset, None)`` on success and ``(None, Verdict)`` otherwise.
    """
    verdict = is_abundance_family(fam)
    if not verdict:
        return None, verdict
    bad = fam.closure_failure()
    if bad:
        kind, a, b = bad
        return None, Verdict.failed(
            f"{kind} leaves the family", {"kind": kind, "a": elements_of(a), "b": elements_of(b)}
        )
    smallest = []
    for e in range(fam.m):
        hull = fam.full
        for b in fam.members:
            if b >> e & 1:
                hull &= b
        smallest.append(hull)
    # u <= v iff H(u) is contained in H(v)
    down = tuple(
        sum(1 << u for u in range(fam.m) if smallest[u] & ~smallest[v] == 0) for v in range(fam.m)
    )
    poset = Poset(fam.m, down)
    if ideals(poset).members != fam.members:
        return None, Verdict.failed("rebuilt poset has a different ideal family", poset.to_json())
    return poset, None


def is_graded_abundance(size, leq, grade):
    """Check monotone grading plus unit up and down steps on a finite order.

    ``leq(i, j)`` is the order on ``range(size)`` and ``grade`` a sequence of
    naturals.  The order must have a least and a greatest element.
    """
    items = range(size)
    bottom = [x for x in items if all(leq(x, y) for y in items)]
    top = [x for x in items if all(leq(y, x) for y in items)]
    if not bottom or not top:
        raise InputError("order lacks a least or a greatest element")
    top_grade = grade[top[0]]
    above = [[y for y in items if leq(x, y)] for x in items]
    for x in items:
        for y in above[x]:
            if grade[x] > grade[y]:
                return Verdict.failed("abundance.monotone", (x, y))
    for x in items:
        if grade[x] <= top_grade - 1 and not any(grade[y] == grade[x] + 1 for y in above[x]):
            return Verdict.failed("abundance.successor", x)
    for y in items:
        if grade[y] >= 1 and not any(grade[x] == grade[y] - 1 and leq(x, y) for x in items):
            return Verdict.failed("abundance.predecessor", y)
    return Verdict.passed()


def family_grading(fam: SetFamily):
    """(members, leq, grade) view of a set family ordered by inclusion."""
    members = sorted(fam.members)
    return members, (lambda i, j: members[i] & ~members[j] == 0), [popcount(b) for b in members]
