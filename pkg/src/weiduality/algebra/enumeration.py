"""Deterministic enumeration of subspaces.

Order: by dimension, then pivot columns (lexicographic), then the free
RREF entries in row-major order.  The position in this order is the
canonical subspace id used by rank tables.
"""

from itertools import combinations, product

from ..errors import CapExceeded, DEFAULT_CAP
from .linalg import Subspace, combine
from .rings import gaussian_binomial


def count_subspaces(n, q, dim=None):
    if dim is not None:
        return gaussian_binomial(n, dim, q)
    return sum(gaussian_binomial(n, d, q) for d in range(n + 1))


def _rref_shapes(n, dim, q):
    for pivots in combinations(range(n), dim):
        pivset = set(pivots)
        slots = [(i, j) for i, pc in enumerate(pivots) for j in range(pc + 1, n) if j not in pivset]
        for values in product(range(q), repeat=len(slots)):
            rows = [[0] * n for _ in range(dim)]
            for i, pc in enumerate(pivots):
                rows[i][pc] = 1
            for (i, j), x in zip(slots, values):
                rows[i][j] = x
            yield tuple(tuple(r) for r in rows)


def enumerate_subspaces(ring, n, dim=None, cap=DEFAULT_CAP):
    """Yield every subspace of GF(q)^n (or those of one dimension)."""
    q = ring.order
    total = count_subspaces(n, q, dim)
    if total > cap:
        raise CapExceeded(f"subspaces of GF({q})^{n}", total, cap)
    dims = range(n + 1) if dim is None else [dim]
    for d in dims:
        for basis in _rref_shapes(n, d, q):
            yield Subspace(ring, n, basis)


def enumerate_subcodes(code: Subspace, r, cap=DEFAULT_CAP):
    """Every r-dimensional subspace of ``code``."""
    ring, k = code.ring, code.dim
    if not 0 <= r <= k:
        raise ValueError(f"subcode dimension {r} outside [0, {k}]")
    total = gaussian_binomial(k, r, ring.order)
    if total > cap:
        raise CapExceeded(f"{r}-dimensional subcodes", total, cap)
    for coords in _rref_shapes(k, r, ring.order):
        rows = [combine(ring, c, code.basis, code.n) for c in coords]
        yield Subspace.span(ring, code.n, rows)
