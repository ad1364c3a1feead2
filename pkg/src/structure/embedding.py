import numpy as np

from src.pcgroup.base import FiniteGroup, as_index_array


class SubgroupGroup(FiniteGroup):
    """A Subgroup re-indexed as a group of its own: element k is H.elements[k]."""

    def __init__(self, H):
        self.subgroup = H
        self.prime = H.prime
        self.order = H.order
        self._members = H.elements

    def localise(self, values):
        return np.searchsorted(self._members, as_index_array(values))

    def _wrap(self, values, scalar):
        out = self.localise(values)
        return int(out[0]) if scalar else out

    def mul(self, a, b):
        scalar = np.ndim(a) == 0 and np.ndim(b) == 0
        parent = self.subgroup.parent
        return self._wrap(parent.mul(self._members[a], self._members[b]), scalar)

    def inv(self, a):
        return self._wrap(self.subgroup.parent.inv(self._members[a]), np.ndim(a) == 0)

    def generators(self):
        return [int(g) for g in self.localise(self.subgroup.gens)]
