"""
Common interface of the finite p-groups the engine computes with.

Elements are the integers 0..order-1 and 0 is the identity. Subclasses supply
``mul`` and ``inv`` (both accept ints or numpy arrays) and ``generators``;
everything else here is derived from those.
"""
import numpy as np


def as_index_array(values):
    return np.atleast_1d(np.asarray(values, dtype=np.int64))


class FiniteGroup:
    identity = 0
    prime = None
    order = None

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def generators(self):
        raise NotImplementedError

    def elements(self):
        return np.arange(self.order, dtype=np.int64)

    def power(self, a, k):
        k = int(k)
        if k < 0:
            a, k = self.inv(a), -k
        scalar = np.ndim(a) == 0
        base = as_index_array(a)
        result = np.zeros_like(base)
        while k:
            if k & 1:
                result = self.mul(result, base)
            k >>= 1
            if k:
                base = self.mul(base, base)
        return int(result[0]) if scalar else result

    def commutator(self, a, b):
        """[a,b] = a^-1 b^-1 a b."""
        return self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))

    def conjugate(self, a, b):
        """a^b = b^-1 a b."""
        return self.mul(self.mul(self.inv(b), a), b)

    def element_orders(self):
        cached = getattr(self, "_orders", None)
        if cached is not None:
            return cached
        orders = np.ones(self.order, dtype=np.int64)
        current = self.elements()
        live = np.flatnonzero(current != 0)
        while live.size:
            orders[live] *= self.prime
            current[live] = self.power(current[live], self.prime)
            live = live[current[live] != 0]
        self._orders = orders
        return orders

    def element_order(self, a):
        return int(self.element_orders()[int(a)])

    def exponent(self):
        return int(self.element_orders().max())

    def closure(self, gens):
        """Sorted elements of the subgroup generated by ``gens``."""
        gens = [int(g) for g in np.unique(as_index_array(gens)) if g != 0] if len(gens) else []
        member = np.zeros(self.order, dtype=bool)
        member[0] = True
        frontier = np.zeros(1, dtype=np.int64)
        while frontier.size and gens:
            found = []
            for g in gens:
                image = np.asarray(self.mul(frontier, g), dtype=np.int64)
                fresh = np.unique(image[~member[image]])
                member[fresh] = True
                found.append(fresh)
            frontier = np.concatenate(found)
        return np.flatnonzero(member)

    def normal_closure(self, gens, by=None):
        """Smallest subgroup containing ``gens`` normalised by ``by``.

        Returns the sorted elements and a generating list for them.
        """
        by = self.generators() if by is None else [int(g) for g in by]
        current = [int(g) for g in gens if int(g) != 0]
        elements = self.closure(current)
        while True:
            mask = np.zeros(self.order, dtype=bool)
            mask[elements] = True
            if not current or not by:
                return elements, current
            gen_array = as_index_array(current)
            images = np.concatenate([as_index_array(self.conjugate(gen_array, g)) for g in by])
            missing = np.unique(images[~mask[images]])
            if missing.size == 0:
                return elements, current
            current = current + [int(m) for m in missing]
            elements = self.closure(current)

    def centralises(self, elements, gens):
        """Boolean mask over ``elements`` of those commuting with every g in ``gens``."""
        elements = as_index_array(elements)
        mask = np.ones(elements.size, dtype=bool)
        for g in gens:
            mask &= np.asarray(self.mul(elements, g)) == np.asarray(self.mul(g, elements))
        return mask

    def is_abelian_set(self, gens):
        gens = as_index_array(gens)
        return all(self.centralises(gens, [g]).all() for g in gens)
