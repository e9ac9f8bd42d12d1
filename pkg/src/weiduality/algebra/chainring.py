"""Linear algebra over Z/p^s.

A :class:`Submodule` keeps its rows in Howell form: echelon rows with
pivots ``p^a``, entries above each pivot reduced below ``p^a``, and closed
under the "multiply by p^(s-a)" step, which makes the form unique.  The
Howell row count may exceed the minimum number of generators, so
:attr:`Submodule.rank` is computed separately as ``log_p |X| / |pX|``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from ..errors import CapExceeded, DEFAULT_CAP, InputError
from .rings import CHAIN, RingSpec


def _require_chain(ring):
    if ring.kind != CHAIN:
        raise InputError(f"{ring} is not a chain ring")


def zdot(ring, u, v):
    mod = ring.order
    return sum(a * b for a, b in zip(u, v)) % mod


def zmatmul(ring, a, b):
    mod = ring.order
    cols = list(zip(*b)) if b else []
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) % mod for col in cols) for row in a)


def _valuation(x, p, s):
    if x == 0:
        return s
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def howell_form(ring, rows, n):
    """Canonical Howell basis of the row span; zero rows dropped."""
    p, s, mod = ring.p, ring.s, ring.order
    pool = [[x % mod for x in r] for r in rows]
    pool = [r for r in pool if any(r)]
    done = []
    pivots = []
    for c in range(n):
        if not pool:
            break
        best = min(range(len(pool)), key=lambda i: (_valuation(pool[i][c], p, s), i))
        a = _valuation(pool[best][c], p, s)
        if a == s:
            continue
        row = pool.pop(best)
        unit = row[c] // p**a
        uinv = pow(unit, -1, mod)
        row = [x * uinv % mod for x in row]
        pa = p**a
        rest = []
        for other in pool:
            x = other[c]
            if x:
                f = x // pa
                other = [(y - f * z) % mod for y, z in zip(other, row)]
            if any(other):
                rest.append(other)
        if a > 0:
            extra = [x * p ** (s - a) % mod for x in row]
            if any(extra):
                rest.append(extra)
        pool = rest
        done.append(row)
        pivots.append((c, pa))
    # reduce entries above each pivot; top-down, since a pivot row only
    # touches columns at or right of its pivot
    for i in range(len(done)):
        c, pa = pivots[i]
        for j in range(i):
            x = done[j][c]
            if x >= pa:
                f = x // pa
                done[j] = [(y - f * z) % mod for y, z in zip(done[j], done[i])]
    return tuple(tuple(r) for r in done), tuple(pivots)


def smith_form(ring, rows, n):
    """Return ``(diag, U, V)`` with ``U A V = D`` and ``D`` diagonal.

    ``diag`` lists the diagonal entries as powers of p (zeros omitted);
    U and V are invertible over the ring.
    """
    _require_chain(ring)
    p, s, mod = ring.p, ring.s, ring.order
    a = [[x % mod for x in r] for r in rows]
    r_count = len(a)
    u = [[int(i == j) for j in range(r_count)] for i in range(r_count)]
    v = [[int(i == j) for j in range(n)] for i in range(n)]
    diag = []
    t = 0
    while t < min(r_count, n):
        best = None
        for i in range(t, r_count):
            for j in range(t, n):
                if a[i][j]:
                    val = _valuation(a[i][j], p, s)
                    if best is None or val < best[0]:
                        best = (val, i, j)
        if best is None:
            break
        val, i, j = best
        a[t], a[i] = a[i], a[t]
        u[t], u[i] = u[i], u[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        for row in v:
            row[t], row[j] = row[j], row[t]
        pv = p**val
        uinv = pow(a[t][t] // pv, -1, mod)
        a[t] = [x * uinv % mod for x in a[t]]
        u[t] = [x * uinv % mod for x in u[t]]
        for i in range(r_count):
            if i != t and a[i][t]:
                f = a[i][t] // pv
                a[i] = [(x - f * y) % mod for x, y in zip(a[i], a[t])]
                u[i] = [(x - f * y) % mod for x, y in zip(u[i], u[t])]
        for j in range(n):
            if j != t and a[t][j]:
                f = a[t][j] // pv
                for row in a:
                    row[j] = (row[j] - f * row[t]) % mod
                for row in v:
                    row[j] = (row[j] - f * row[t]) % mod
        diag.append(pv)
        t += 1
    return tuple(diag), tuple(map(tuple, u)), tuple(map(tuple, v))


def zinverse(ring, mat):
    """Inverse of a square matrix over Z/p^s by Gauss-Jordan on units."""
    mod = ring.order
    n = len(mat)
    aug = [list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(mat)]
    for c in range(n):
        piv = next((i for i in range(c, n) if ring.is_unit(aug[i][c] % mod)), None)
        if piv is None:
            raise InputError("matrix is not invertible")
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = pow(aug[c][c], -1, mod)
        aug[c] = [x * inv % mod for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c]:
                f = aug[i][c]
                aug[i] = [(x - f * y) % mod for x, y in zip(aug[i], aug[c])]
    return tuple(tuple(r[n:]) for r in aug)


def is_invertible(ring, mat):
    try:
        zinverse(ring, mat)
    except InputError:
        return False
    return True


def zkernel(ring, rows, n):
    """Generators of ``{y : row . y = 0 for every row}``."""
    p, s = ring.p, ring.s
    if not rows:
        return [tuple(int(i == j) for j in range(n)) for i in range(n)]
    diag, _, v = smith_form(ring, rows, n)
    cols = list(zip(*v))
    gens = []
    for i in range(n):
        if i < len(diag):
            b = _valuation(diag[i], p, s)
            if b == 0:
                continue
            scale = p ** (s - b)
            gens.append(tuple(x * scale % ring.order for x in cols[i]))
        else:
            gens.append(tuple(cols[i]))
    return gens


@dataclass(frozen=True)
class Submodule:
    """A submodule of (Z/p^s)^n held in Howell form."""

    ring: RingSpec
    n: int
    rows: tuple[tuple[int, ...], ...]

    @classmethod
    def span(cls, ring, n, gens=()):
        _require_chain(ring)
        gens = [tuple(g) for g in gens]
        for g in gens:
            if len(g) != n:
                raise InputError(f"generator of length {len(g)} in ambient of length {n}")
            if any(not (0 <= x < ring.order) for x in g):
                raise InputError(f"entries of {g} not in {ring}")
        rows, _ = howell_form(ring, gens, n)
        return cls(ring, n, rows)

    @classmethod
    def zero(cls, ring, n):
        return cls(ring, n, ())

    @classmethod
    def full(cls, ring, n):
        return cls.span(ring, n, [tuple(int(i == j) for j in range(n)) for i in range(n)])

    @cached_property
    def pivots(self):
        return howell_form(self.ring, self.rows, self.n)[1]

    @cached_property
    def log_size(self):
        """log_p of the number of elements."""
        p, s = self.ring.p, self.ring.s
        return sum(s - _valuation(pa, p, s) for _, pa in self.pivots)

    @property
    def size(self):
        return self.ring.p**self.log_size

    @cached_property
    def rank(self):
        """Minimum number of generators."""
        p = self.ring.p
        scaled = Submodule.span(self.ring, self.n, [tuple(x * p % self.ring.order for x in r) for r in self.rows])
        return self.log_size - scaled.log_size

    @cached_property
    def smith(self):
        return smith_form(self.ring, self.rows, self.n)

    @property
    def elementary_divisors(self):
        return self.smith[0]

    def minimal_generators(self):
        """``rank`` generators ``d_i * (row i of V^-1)``."""
        diag, _, v = self.smith
        vinv = zinverse(self.ring, v)
        mod = self.ring.order
        return [tuple(d * x % mod for x in vinv[i]) for i, d in enumerate(diag)]

    def is_free(self):
        return all(d == 1 for d in self.elementary_divisors)

    def reduce(self, v):
        mod = self.ring.order
        v = list(x % mod for x in v)
        for row, (c, pa) in zip(self.rows, self.pivots):
            x = v[c]
            if x:
                f = x // pa
                v = [(a - f * b) % mod for a, b in zip(v, row)]
        return tuple(v)

    def __contains__(self, v):
        return not any(self.reduce(v))

    def __le__(self, other):
        return all(r in other for r in self.rows)

    def __add__(self, other):
        return Submodule.span(self.ring, self.n, self.rows + other.rows)

    def __and__(self, other):
        """Intersection, using the double annihilator of ``other``."""
        if not self.rows:
            return self
        perp = zkernel(self.ring, other.rows, self.n) if other.rows else [
            tuple(int(i == j) for j in range(self.n)) for i in range(self.n)
        ]
        if not perp:
            return self
        # coefficient vectors c with (c A) . y = 0 for all y in other-perp
        constraint = zmatmul(self.ring, perp, tuple(zip(*self.rows)))
        coeffs = zkernel(self.ring, constraint, len(self.rows))
        return Submodule.span(self.ring, self.n, zmatmul(self.ring, coeffs, self.rows) if coeffs else ())

    def elements(self):
        """All elements, by breadth-first closure of the Howell rows."""
        mod = self.ring.order
        seen = {(0,) * self.n}
        frontier = list(seen)
        while frontier:
            nxt = []
            for x in frontier:
                for row in self.rows:
                    y = tuple((a + b) % mod for a, b in zip(x, row))
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return sorted(seen)

    def support(self):
        mask = 0
        for row in self.rows:
            for i, x in enumerate(row):
                if x:
                    mask |= 1 << i
        return mask

    def key(self):
        return self.rows

    def to_json(self):
        return [list(r) for r in self.rows]

    def __repr__(self):
        return f"Submodule({self.ring}, n={self.n}, rows={[list(r) for r in self.rows]})"


def standard_form(ring, rows, n=None):
    """Canonical submodule for the row span together with its rank."""
    if n is None:
        n = len(rows[0]) if rows else 0
    sub = Submodule.span(ring, n, rows)
    return sub, sub.rank


def enumerate_submodules(ambient: Submodule, cap=DEFAULT_CAP):
    """Every submodule of ``ambient``, sorted by (log size, rows)."""
    # every submodule is a sum of cyclic ones, so grow by those alone
    cyclic = {}
    for x in ambient.elements():
        if any(x):
            c = Submodule.span(ambient.ring, ambient.n, [x])
            cyclic.setdefault(c.key(), c)
    cyclic = list(cyclic.values())
    zero = Submodule.zero(ambient.ring, ambient.n)
    found = {zero.key(): zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for sub in frontier:
            for c in cyclic:
                if c <= sub:
                    continue
                bigger = Submodule.span(sub.ring, sub.n, sub.rows + c.rows)
                if bigger.key() not in found:
                    found[bigger.key()] = bigger
                    nxt.append(bigger)
                    if len(found) > cap:
                        raise CapExceeded("submodules", len(found), cap)
        frontier = nxt
    return sorted(found.values(), key=lambda m: (m.log_size, m.rows))
