"""Dense exact linear algebra over GF(q).

Vectors are tuples of field elements, matrices are tuples of row vectors.
A :class:`Subspace` always stores its reduced row-echelon basis, so two
subspaces are equal exactly when their bases are.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from ..errors import InputError
from .rings import RingSpec


def _require_field(ring):
    if not ring.is_field:
        raise InputError(f"{ring} is not a field; use the chain-ring routines")


def rref(ring: RingSpec, rows):
    """Reduced row-echelon form.

    Returns ``(rows, pivots)`` with zero rows dropped; ``len(pivots)`` is
    the rank.
    """
    _require_field(ring)
    t = ring.tables
    add, mul, neg, inv = t.add, t.mul, t.neg, t.inv
    mat = [list(r) for r in rows]
    ncols = len(mat[0]) if mat else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        row = mat[r]
        s = inv[row[c]]
        if s != 1:
            row = mat[r] = [mul[s][x] for x in row]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = neg[mat[i][c]]
                other = mat[i]
                mat[i] = [add[a][mul[f][b]] for a, b in zip(other, row)]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return tuple(tuple(row) for row in mat[:r]), tuple(pivots)


def rank(ring, rows):
    return len(rref(ring, rows)[1]) if rows else 0


def transpose(rows):
    return tuple(zip(*rows)) if rows else ()


def matmul(ring, a, b):
    t = ring.tables
    add, mul = t.add, t.mul
    bt = transpose(b)
    out = []
    for row in a:
        out_row = []
        for col in bt:
            acc = 0
            for x, y in zip(row, col):
                if x and y:
                    acc = add[acc][mul[x][y]]
            out_row.append(acc)
        out.append(tuple(out_row))
    return tuple(out)


def trace(ring, mat):
    acc = 0
    for i, row in enumerate(mat):
        acc = ring.add(acc, row[i])
    return acc


def dot(ring, u, v):
    t = ring.tables
    add, mul = t.add, t.mul
    acc = 0
    for x, y in zip(u, v):
        if x and y:
            acc = add[acc][mul[x][y]]
    return acc


def combine(ring, coeffs, rows, n):
    """Linear combination sum(c_i * rows_i) as a length-n vector."""
    t = ring.tables
    add, mul = t.add, t.mul
    out = [0] * n
    for c, row in zip(coeffs, rows):
        if c:
            out = [add[a][mul[c][b]] for a, b in zip(out, row)]
    return tuple(out)


def nullspace(ring, rows, n):
    """Basis of ``{x : row . x = 0 for every row}`` in GF(q)^n."""
    red, pivots = rref(ring, rows) if rows else ((), ())
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fcol in free:
        v = [0] * n
        v[fcol] = 1
        for row, pc in zip(red, pivots):
            v[pc] = ring.neg(row[fcol])
        basis.append(tuple(v))
    return basis


@dataclass(frozen=True)
class Subspace:
    """A subspace of GF(q)^n held by its RREF basis."""

    ring: RingSpec
    n: int
    basis: tuple[tuple[int, ...], ...]

    @classmethod
    def span(cls, ring, n, rows=()):
        rows = [tuple(r) for r in rows]
        for r in rows:
            if len(r) != n:
                raise InputError(f"vector of length {len(r)} in ambient of dimension {n}")
            if any(not (0 <= x < ring.order) for x in r):
                raise InputError(f"entries of {r} not in {ring}")
        basis, _ = rref(ring, rows) if rows else ((), ())
        return cls(ring, n, basis)

    @classmethod
    def zero(cls, ring, n):
        return cls(ring, n, ())

    @classmethod
    def full(cls, ring, n):
        return cls(ring, n, tuple(unit(n, i) for i in range(n)))

    @property
    def dim(self):
        return len(self.basis)

    @cached_property
    def pivots(self):
        return tuple(next(i for i, x in enumerate(row) if x) for row in self.basis)

    def reduce(self, v):
        """Remainder of v after clearing the pivot coordinates."""
        t = self.ring.tables
        add, mul, neg = t.add, t.mul, t.neg
        v = list(v)
        for row, pc in zip(self.basis, self.pivots):
            c = v[pc]
            if c:
                f = neg[c]
                v = [add[a][mul[f][b]] for a, b in zip(v, row)]
        return tuple(v)

    def __contains__(self, v):
        return not any(self.reduce(v))

    def issubspace(self, other: Subspace):
        """self <= other."""
        if self.dim > other.dim:
            return False
        return all(row in other for row in self.basis)

    def __le__(self, other):
        return self.issubspace(other)

    def __add__(self, other: Subspace):
        _same_ambient(self, other)
        return Subspace.span(self.ring, self.n, self.basis + other.basis)

    def __and__(self, other: Subspace):
        """Intersection by the Zassenhaus sum-intersection algorithm."""
        _same_ambient(self, other)
        if not self.dim or not other.dim:
            return Subspace.zero(self.ring, self.n)
        n = self.n
        zeros = (0,) * n
        rows = [a + a for a in self.basis] + [b + zeros for b in other.basis]
        red, pivots = rref(self.ring, rows)
        inter = [row[n:] for row, pc in zip(red, pivots) if pc >= n]
        return Subspace.span(self.ring, n, inter)

    def elements(self):
        """Every vector of the subspace, in coefficient-lexicographic order."""
        from itertools import product

        q = self.ring.order
        for coeffs in product(range(q), repeat=self.dim):
            yield combine(self.ring, coeffs, self.basis, self.n)

    def support(self):
        """Bitmask of coordinates that are nonzero somewhere on the subspace."""
        mask = 0
        for row in self.basis:
            for i, x in enumerate(row):
                if x:
                    mask |= 1 << i
        return mask

    def annihilator(self, form: BilinearForm | None = None, side="right"):
        form = form or BilinearForm.standard(self.ring, self.n)
        return form.right_perp(self) if side == "right" else form.left_perp(self)

    def extend_scalars(self, ring: RingSpec):
        """The same spanning rows read in an extension field."""
        if ring.p != self.ring.p or not ring.is_field:
            raise InputError(f"{ring} does not extend {self.ring}")
        return Subspace.span(ring, self.n, self.basis)

    def key(self):
        return self.basis

    def to_json(self):
        return [list(r) for r in self.basis]

    def __repr__(self):
        return f"Subspace({self.ring}, n={self.n}, basis={[list(r) for r in self.basis]})"


def unit(n, i):
    v = [0] * n
    v[i] = 1
    return tuple(v)


def _same_ambient(a, b):
    if a.ring != b.ring or a.n != b.n:
        raise InputError(f"ambient mismatch: {a.ring}^{a.n} vs {b.ring}^{b.n}")


@dataclass(frozen=True)
class BilinearForm:
    """``<x, y> = x G y^T`` for an invertible Gram matrix ``G``."""

    ring: RingSpec
    gram: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.gram)
        if any(len(r) != n for r in self.gram):
            raise InputError("Gram matrix must be square")
        if self.ring.is_field:
            if rank(self.ring, self.gram) != n:
                raise InputError("degenerate bilinear form")
        else:
            from .chainring import is_invertible

            if not is_invertible(self.ring, self.gram):
                raise InputError("degenerate bilinear form")

    @property
    def n(self):
        return len(self.gram)

    @classmethod
    def standard(cls, ring, n):
        return cls(ring, tuple(unit(n, i) for i in range(n)))

    @classmethod
    def trace_form(cls, ext: RingSpec):
        """``(x, y) -> Tr(x y)`` on GF(p^e) viewed as GF(p)^e.

        Coordinates are the polynomial-basis digits of the element encoding.
        """
        base = RingSpec.gf(ext.p)
        basis = [ext.p**i for i in range(ext.e)]
        gram = tuple(tuple(ext.trace(ext.mul(a, b)) for b in basis) for a in basis)
        return cls(base, gram)

    def __call__(self, x, y):
        if self.ring.is_field:
            return dot(self.ring, matmul(self.ring, (tuple(x),), self.gram)[0], y)
        from .chainring import zdot, zmatmul

        return zdot(self.ring, zmatmul(self.ring, (tuple(x),), self.gram)[0], y)

    def right_perp(self, space):
        """``{y : <x, y> = 0 for all x in space}``."""
        if space.n != self.n:
            raise InputError("form/ambient dimension mismatch")
        if self.ring.is_field:
            rows = matmul(self.ring, space.basis, self.gram) if space.dim else ()
            return Subspace.span(self.ring, self.n, nullspace(self.ring, rows, self.n))
        from .chainring import Submodule, zkernel, zmatmul

        rows = zmatmul(self.ring, space.rows, self.gram) if space.rows else ()
        return Submodule.span(self.ring, self.n, zkernel(self.ring, rows, self.n))

    def left_perp(self, space):
        """``{x : <x, y> = 0 for all y in space}``."""
        if space.n != self.n:
            raise InputError("form/ambient dimension mismatch")
        gt = transpose(self.gram)
        if self.ring.is_field:
            rows = matmul(self.ring, space.basis, gt) if space.dim else ()
            return Subspace.span(self.ring, self.n, nullspace(self.ring, rows, self.n))
        from .chainring import Submodule, zkernel, zmatmul

        rows = zmatmul(self.ring, space.rows, gt) if space.rows else ()
        return Submodule.span(self.ring, self.n, zkernel(self.ring, rows, self.n))

    def is_symmetric(self):
        return self.gram == transpose(self.gram)
