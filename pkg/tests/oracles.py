"""Brute-force reference computations that share no code with the library.

Field elements are integers whose base-p digits are polynomial
coefficients, low degree first, reduced modulo the same fixed moduli the
library documents (x^2 + x + 1 for GF(4), x^3 + x + 1 for GF(8), x^2 + 1
for GF(9)).
"""

from itertools import combinations, product

MODULI = {(2, 1): (0, 1), (3, 1): (0, 1), (5, 1): (0, 1), (2, 2): (1, 1, 1), (2, 3): (1, 1, 0, 1), (3, 2): (1, 0, 1)}
PRIME_POWER = {2: (2, 1), 3: (3, 1), 4: (2, 2), 5: (5, 1), 8: (2, 3), 9: (3, 2)}


def digits(a, p, e):
    return [(a // p**i) % p for i in range(e)]


def undigits(ds, p):
    return sum(d * p**i for i, d in enumerate(ds))


class Field:
    def __init__(self, q):
        self.q = q
        self.p, self.e = PRIME_POWER[q]

    def add(self, a, b):
        p, e = self.p, self.e
        return undigits([(x + y) % p for x, y in zip(digits(a, p, e), digits(b, p, e))], p)

    def neg(self, a):
        p, e = self.p, self.e
        return undigits([(-x) % p for x in digits(a, p, e)], p)

    def mul(self, a, b):
        p, e = self.p, self.e
        if e == 1:
            return a * b % p
        prod = [0] * (2 * e - 1)
        for i, x in enumerate(digits(a, p, e)):
            for j, y in enumerate(digits(b, p, e)):
                prod[i + j] = (prod[i + j] + x * y) % p
        mod = MODULI[(p, e)]
        for deg in range(len(prod) - 1, e - 1, -1):
            c = prod[deg]
            if c:
                for i, mc in enumerate(mod):
                    prod[deg - e + i] = (prod[deg - e + i] - c * mc) % p
        return undigits(prod[:e], p)

    def dot(self, u, v):
        total = 0
        for x, y in zip(u, v):
            total = self.add(total, self.mul(x, y))
        return total


def span(field, rows, n):
    """Every element of the span, as a frozenset of tuples."""
    out = {tuple([0] * n)}
    for row in rows:
        new = set()
        for v in out:
            for c in range(field.q):
                new.add(tuple(field.add(x, field.mul(c, y)) for x, y in zip(v, row)))
        out = new
    return frozenset(out)


def dim_of(field, elements):
    size, d = len(elements), 0
    while field.q**d < size:
        d += 1
    assert field.q**d == size
    return d


def support(v):
    return sum(1 << i for i, x in enumerate(v) if x)


def ghw_by_support(field, rows, m):
    """d_r = min |J| with q^r <= #{codewords supported inside J}."""
    words = span(field, rows, m)
    k = dim_of(field, words)
    inside = [sum(1 for c in words if support(c) & ~mask == 0) for mask in range(1 << m)]
    d = []
    for r in range(k + 1):
        d.append(min(bin(mask).count("1") for mask in range(1 << m) if inside[mask] >= field.q**r))
    return d


def dlp_by_support(field, rows, m):
    words = span(field, rows, m)
    out = []
    for l in range(m + 1):
        best = 0
        for J in combinations(range(m), l):
            mask = sum(1 << j for j in J)
            count = sum(1 for c in words if support(c) & ~mask == 0)
            best = max(best, dim_of(field, frozenset(range(count))))
        out.append(best)
    return out


def dual_elements(field, rows, m):
    """All vectors orthogonal to every row, by exhaustive search."""
    return frozenset(v for v in product(range(field.q), repeat=m) if all(field.dot(v, r) == 0 for r in rows))


def all_subspaces(field, n):
    """Every subspace of F_q^n as a frozenset of vectors (small n only)."""
    vectors = [v for v in product(range(field.q), repeat=n) if any(v)]
    found = {frozenset({tuple([0] * n)})}
    frontier = list(found)
    while frontier:
        nxt = []
        for s in frontier:
            for v in vectors:
                if v not in s:
                    t = span(field, [v] + _basis(field, s, n), n)
                    if t not in found:
                        found.add(t)
                        nxt.append(t)
        frontier = nxt
    return found


def _basis(field, elements, n):
    basis, seen = [], {tuple([0] * n)}
    for v in sorted(elements):
        if v not in seen:
            basis.append(v)
            seen = set(span(field, basis, n))
    return basis


# --- Z/p^s ------------------------------------------------------------------------


def z_span(mod, rows, n):
    """Additive closure of the rows: for Z/p^s submodules equal subgroups."""
    out = {tuple([0] * n)}
    for row in rows:
        out = {tuple((x + c * y) % mod for x, y in zip(v, row)) for v in out for c in range(mod)}
    return frozenset(out)


def min_generators(mod, elements, n):
    """Fewest elements whose span is ``elements``."""
    nonzero = sorted(v for v in elements if any(v))
    if not nonzero:
        return 0
    for r in range(1, n + 1):
        for combo in combinations(nonzero, r):
            if z_span(mod, combo, n) == elements:
                return r
    raise AssertionError("needs more than n generators")


def all_z_submodules(mod, n):
    vectors = list(product(range(mod), repeat=n))
    found = set()
    for r in range(n + 1):
        for combo in combinations(vectors, r):
            found.add(z_span(mod, combo, n))
    return found


def integer_elementary_divisors(rows, n, p, s):
    """Elementary divisors of the row module over Z/p^s from the integer Smith form of [A; p^s I]."""
    from sympy import Matrix, ZZ
    from sympy.matrices.normalforms import smith_normal_form

    mod = p**s
    stacked = [list(r) for r in rows] + [[mod if i == j else 0 for j in range(n)] for i in range(n)]
    snf = smith_normal_form(Matrix(stacked), domain=ZZ)
    diag = [abs(int(snf[i, i])) for i in range(min(snf.shape))]
    return sorted(d for d in diag if d % mod)
