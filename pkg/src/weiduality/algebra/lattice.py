"""The lattice of all subspaces of GF(q)^n with canonical integer ids."""

from functools import cached_property

from ..errors import DEFAULT_CAP
from .enumeration import enumerate_subcodes, enumerate_subspaces
from .linalg import BilinearForm


class SubspaceLattice:
    def __init__(self, ring, n, cap=DEFAULT_CAP):
        self.ring = ring
        self.n = n
        self.cap = cap
        self.spaces = list(enumerate_subspaces(ring, n, cap=cap))
        self._ids = {s.key(): i for i, s in enumerate(self.spaces)}
        self.dims = [s.dim for s in self.spaces]

    def __len__(self):
        return len(self.spaces)

    def __getitem__(self, i):
        return self.spaces[i]

    def index(self, space):
        return self._ids[space.key()]

    @property
    def bottom(self):
        return 0

    @property
    def top(self):
        return len(self.spaces) - 1

    def by_dim(self, d):
        return [i for i, dim in enumerate(self.dims) if dim == d]

    @cached_property
    def lower_covers(self):
        """For each id, the ids of its hyperplanes."""
        covers = []
        for s in self.spaces:
            if s.dim == 0:
                covers.append(())
            else:
                covers.append(tuple(sorted(self.index(h) for h in enumerate_subcodes(s, s.dim - 1, self.cap))))
        return covers

    def cover_pairs(self):
        for y, lows in enumerate(self.lower_covers):
            for x in lows:
                yield x, y

    def perp_map(self, form=None):
        """Ids of right annihilators, as a list indexed by id."""
        form = form or BilinearForm.standard(self.ring, self.n)
        return [self.index(form.right_perp(s)) for s in self.spaces]

    def left_perp_map(self, form=None):
        form = form or BilinearForm.standard(self.ring, self.n)
        return [self.index(form.left_perp(s)) for s in self.spaces]

    def leq(self, a, b):
        return self.spaces[a] <= self.spaces[b]
