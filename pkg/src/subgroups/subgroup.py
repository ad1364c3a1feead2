"""
Subgroups of a finite group, kept as sorted arrays of the parent's elements.

Everything below the whole group works in the parent's element space, so a
subgroup of a subgroup needs no re-indexing and fingerprints compare directly.
"""
import hashlib

import numpy as np

from src.pcgroup.base import as_index_array


def contains(sorted_elements, values):
    values = as_index_array(values)
    if sorted_elements.size == 0:
        return np.zeros(values.shape, dtype=bool)
    positions = np.searchsorted(sorted_elements, values)
    positions = np.minimum(positions, sorted_elements.size - 1)
    return sorted_elements[positions] == values


class Subgroup:
    def __init__(self, parent, elements, gens):
        self.parent = parent
        self.elements = np.asarray(elements, dtype=np.int64)
        self.gens = [int(g) for g in gens if int(g) != 0]
        self._fingerprint = None
        self.cache = {}

    @classmethod
    def whole(cls, group):
        whole = getattr(group, "_whole_subgroup", None)
        if whole is None:
            whole = cls(group, group.elements(), group.generators())
            group._whole_subgroup = whole
        return whole

    @classmethod
    def from_elements(cls, parent, elements):
        """Wrap a known subgroup, choosing a small generating set for it."""
        elements = np.unique(as_index_array(elements))
        _, gens = span(parent, elements)
        return cls(parent, elements, gens)

    @property
    def order(self):
        return int(self.elements.size)

    @property
    def prime(self):
        return self.parent.prime

    @property
    def fingerprint(self):
        if self._fingerprint is None:
            digest = hashlib.sha256()
            digest.update(str(self.order).encode())
            digest.update(self.elements.tobytes())
            self._fingerprint = digest.hexdigest()
        return self._fingerprint

    def contains(self, values):
        return contains(self.elements, values)

    def issubset(self, other):
        return bool(other.contains(self.elements).all())

    def is_trivial(self):
        return self.order == 1

    def is_normal_in(self, other):
        """Whether ``other`` normalises this subgroup."""
        for g in other.gens:
            images = self.parent.conjugate(as_index_array(self.gens), g) if self.gens else []
            if len(images) and not self.contains(images).all():
                return False
        return True

    def index_in(self, other):
        return other.order // self.order

    def __eq__(self, other):
        return (isinstance(other, Subgroup) and self.parent is other.parent
                and self.fingerprint == other.fingerprint)

    def __hash__(self):
        return hash(self.fingerprint)

    def __repr__(self):
        return f"Subgroup(order={self.order}, gens={self.gens})"


def span(parent, candidates):
    """The subgroup generated by ``candidates`` and a short generating list for it.

    Elements of largest order are taken first so the list stays near d(H).
    """
    candidates = np.unique(as_index_array(candidates))
    candidates = candidates[candidates != 0]
    if candidates.size:
        orders = parent.element_orders()[candidates]
        candidates = candidates[np.lexsort((candidates, -orders))]
    gens = []
    elements = np.zeros(1, dtype=np.int64)
    while True:
        outside = candidates[~contains(elements, candidates)]
        if outside.size == 0:
            return elements, gens
        gens.append(int(outside[0]))
        elements = parent.closure(gens)


def as_subgroup(H):
    return H if isinstance(H, Subgroup) else Subgroup.whole(H)


def closure(G, gens):
    """Smallest subgroup of G containing ``gens``."""
    parent = G.parent if isinstance(G, Subgroup) else G
    gens = [int(g) for g in gens]
    return Subgroup(parent, parent.closure(gens), gens)


def normal_closure(H, gens):
    """Smallest subgroup normalised by H that contains ``gens``."""
    H = as_subgroup(H)
    elements, normal_gens = H.parent.normal_closure([int(g) for g in gens], H.gens)
    return Subgroup(H.parent, elements, normal_gens)


def intersection(A, B):
    return Subgroup.from_elements(A.parent, np.intersect1d(A.elements, B.elements))


def join(A, B):
    return closure(A.parent, A.gens + B.gens)


def element_with_coordinates(parent, basis, vector):
    g = 0
    for b, c in zip(basis, vector):
        if c:
            g = int(parent.mul(g, parent.power(b, int(c))))
    return g
