"""Generalized Hamming weights and dimension/length profiles."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .algebra.enumeration import enumerate_subcodes
from .algebra.linalg import Subspace, rank, unit
from .algebra.rings import RingSpec
from .errors import DEFAULT_CAP, InputError
from .galois import (
    GaloisPair,
    MonotoneTable,
    central_theorem_report,
    check_galois_pair,
    partition_verdict,
    reflection_verdict,
    weight_partition,
)
from .posets import popcount
from .report import Report, Verdict


@dataclass(frozen=True)
class LinearCode:
    ring: RingSpec
    m: int
    gen: Subspace

    def __post_init__(self):
        if self.gen.n != self.m or self.gen.ring != self.ring:
            raise InputError("generator does not live in the code's ambient space")

    @classmethod
    def from_rows(cls, ring, rows, m=None):
        rows = [tuple(r) for r in rows]
        if m is None:
            if not rows:
                raise InputError("length m is required for an empty generator")
            m = len(rows[0])
        return cls(ring, m, Subspace.span(ring, m, rows))

    @property
    def k(self):
        return self.gen.dim

    @cached_property
    def intersection_dims(self):
        """dim(C & delta(J)) for every J, as k minus the rank of the columns outside J."""
        k, m = self.k, self.m
        cols = list(zip(*self.gen.basis)) if k else [()] * m
        out = []
        for mask in range(1 << m):
            outside = [cols[i] for i in range(m) if not mask >> i & 1]
            out.append(k - (rank(self.ring, outside) if outside and k else 0))
        return tuple(out)

    def to_json(self):
        return {"ring": self.ring.to_json(), "m": self.m, "generator": self.gen.to_json()}


def chi_support(space: Subspace):
    return space.support()


def delta(mask, m, ring):
    return Subspace(ring, m, tuple(unit(m, i) for i in range(m) if mask >> i & 1))


def ghw(code: LinearCode, r, method="subset", cap=DEFAULT_CAP):
    if not 0 <= r <= code.k:
        raise InputError(f"r={r} outside [0, {code.k}]")
    if method == "subset":
        dims = code.intersection_dims
        return min(popcount(mask) for mask in range(1 << code.m) if dims[mask] >= r)
    if method == "subcode":
        return min(popcount(d.support()) for d in enumerate_subcodes(code.gen, r, cap))
    raise InputError(f"unknown method {method!r}")


def ghw_table(code, method="subset", cap=DEFAULT_CAP):
    return [ghw(code, r, method, cap) for r in range(code.k + 1)]


def dlp(code: LinearCode, l):
    if not 0 <= l <= code.m:
        raise InputError(f"l={l} outside [0, {code.m}]")
    dims = code.intersection_dims
    return max(dims[mask] for mask in range(1 << code.m) if popcount(mask) == l)


def dlp_table(code):
    return [dlp(code, l) for l in range(code.m + 1)]


def ghw_pair(code):
    return GaloisPair(MonotoneTable(tuple(ghw_table(code)), code.m), MonotoneTable(tuple(dlp_table(code)), code.k))


def dual_code(code: LinearCode):
    return LinearCode(code.ring, code.m, code.gen.annihilator())


def wei_verdict(code_ghw, dual_ghw, m):
    """{d_r(C)} and {m + 1 - d_s(C^perp)} partition [1, m]."""
    k = len(code_ghw) - 1
    return partition_verdict(weight_partition(code_ghw, dual_ghw, 1, k, m), m)


def forney_verdict(code_dlp, dual_dlp, k):
    m = len(code_dlp) - 1
    for l in range(m + 1):
        if dual_dlp[l] != code_dlp[m - l] + l - k:
            return Verdict.failed("profile identity fails", {"l": l, "dual": dual_dlp[l], "expected": code_dlp[m - l] + l - k})
    return Verdict.passed()


def wei_forney_report(code: LinearCode, oracle_cap=256):
    """Wei partition, Forney identity, and their reading through the central theorem."""
    dual = dual_code(code)
    m, k = code.m, code.k
    d, K = ghw_table(code), dlp_table(code)
    dd, dK = ghw_table(dual), dlp_table(dual)
    report = Report("wei-forney")
    report.add("t21.code", check_galois_pair(MonotoneTable(tuple(d), m), MonotoneTable(tuple(K), k)))
    report.add("t21.dual", check_galois_pair(MonotoneTable(tuple(dd), m), MonotoneTable(tuple(dK), m - k)))
    wei = wei_verdict(d, dd, m)
    forney = forney_verdict(K, dK, k)
    report.add("wei.partition", wei)
    report.add("forney.identity", forney)
    report.add("dual.involution", dual_code(dual).gen == code.gen)
    if code.ring.order ** max(code.k, m - k) <= oracle_cap:
        for name, c, table in (("code", code, d), ("dual", dual, dd)):
            sub = ghw_table(c, "subcode")
            report.add(f"ghw.oracle.{name}", sub == table, None if sub == table else {"subcode": sub, "subset": table})
    pair1 = GaloisPair(MonotoneTable(tuple(d), m), MonotoneTable(tuple(K), k))
    pair2 = GaloisPair(MonotoneTable(tuple(dd), m), MonotoneTable(tuple(dK), m - k))
    central = central_theorem_report(pair1, pair2, 1, prefix="remark23")
    report.extend(central)
    s = central.tables["statements"]
    report.add("remark23.agree", s[0] == bool(forney) and s[2] == bool(wei), {"statements": s})
    report.add("remark23.reflection", reflection_verdict(pair1, dK, 1))
    report.tables.update(ghw=d, dlp=K, dual_ghw=dd, dual_dlp=dK, k=k, m=m)
    return report


def random_code(rng, ring, m, k=None):
    """A code of length m and dimension k (uniform in [0, m] when omitted)."""
    if k is None:
        k = rng.randint(0, m)
    q = ring.order
    while True:
        rows = [tuple(rng.randint(0, q - 1) for _ in range(m)) for _ in range(k)]
        code = LinearCode.from_rows(ring, rows, m)
        if code.k == k:
            return code
