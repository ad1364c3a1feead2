import numpy as np

from src.pcgroup.base import FiniteGroup, as_index_array


class QuotientGroup(FiniteGroup):
    """G/N as a coset table over any parent group.

    Cosets are numbered by their smallest element, so the identity coset is 0.
    """

    def __init__(self, parent, normal_elements):
        self.parent = parent
        self.prime = parent.prime
        normal = as_index_array(normal_elements)
        coset_of = np.full(parent.order, -1, dtype=np.int64)
        reps = []
        for g in range(parent.order):
            if coset_of[g] >= 0:
                continue
            coset_of[np.asarray(parent.mul(g, normal), dtype=np.int64)] = len(reps)
            reps.append(g)
        self.coset_of = coset_of
        self.reps = np.asarray(reps, dtype=np.int64)
        self.order = len(reps)
        self.kernel_order = int(normal.size)

    def mul(self, a, b):
        scalar = np.ndim(a) == 0 and np.ndim(b) == 0
        out = self.coset_of[as_index_array(self.parent.mul(self.reps[a], self.reps[b]))]
        return int(out[0]) if scalar else out

    def inv(self, a):
        scalar = np.ndim(a) == 0
        out = self.coset_of[as_index_array(self.parent.inv(self.reps[a]))]
        return int(out[0]) if scalar else out

    def project(self, g):
        return self.coset_of[g]

    def generators(self):
        images = np.unique(self.coset_of[as_index_array(self.parent.generators())])
        return [int(g) for g in images if g != 0]
