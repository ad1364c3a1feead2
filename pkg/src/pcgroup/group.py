"""
The power-commutator group kernel.

A presentation with levels x_0, ..., x_{k-1} describes a tower
G = N_0 > N_1 > ... > N_k = 1 where N_i = <x_i> N_{i+1}, x_i has relative order
q_i = p^e_i over N_{i+1}, x_i^{q_i} = w_i lies in N_{i+1}, and conjugation by
x_i is an automorphism of N_{i+1}. An element x_i^a * n of N_i is stored as the
integer a * |N_{i+1}| + index(n), so the indices of N_{i+1} are reused unchanged
inside every larger N_i and G is {0, ..., |G|-1}.

For every level the kernel keeps the table P_i[b] = (conjugation by x_i)^b on
N_{i+1} and left multiplication by w_i. Multiplication then collects one level
at a time, vectorised over numpy arrays:

    (x^a n)(x^b m) = x^(a+b) * (n^(x^b)) * m,   reducing x^q to w.
"""
from dataclasses import dataclass
from typing import Dict, List

import numpy as np

from src.pcgroup.base import FiniteGroup, as_index_array
from src.pcgroup.errors import OrderGuardExceeded, UnresolvedWord
from src.pcgroup.words import evaluate_word
from src.utils.logger import log

DEFAULT_MAX_ORDER = 10 ** 6


@dataclass
class _Level:
    name: str
    q: int
    size_below: int
    w: int
    images: Dict[int, int]
    phi: np.ndarray
    P: np.ndarray
    Lw: np.ndarray


class _Tail(FiniteGroup):
    """N_start viewed as a group of its own while the levels above it are built."""

    def __init__(self, group, start):
        self.group = group
        self.start = start
        self.prime = group.prime
        self.order = group.sizes[start]

    def mul(self, a, b):
        return self.group._mul_from(self.start, a, b)

    def inv(self, a):
        return self.group._inv_from(self.start, a)

    def generators(self):
        return [self.group.sizes[j + 1] for j in range(self.start, self.group.length)]


class PcGroup(FiniteGroup):
    """Finite p-group given by a PcPresentation."""

    def __init__(self, presentation, max_order=DEFAULT_MAX_ORDER):
        self.presentation = presentation
        self.prime = presentation.prime
        self.names = list(presentation.names)
        self.length = len(self.names)
        self.relative_orders = [self.prime ** e for e in presentation.exponents]

        order = 1
        for q in self.relative_orders:
            order *= q
        if order > max_order:
            raise OrderGuardExceeded(order, max_order)
        self.order = order

        self.sizes = [1] * (self.length + 1)
        for i in reversed(range(self.length)):
            self.sizes[i] = self.relative_orders[i] * self.sizes[i + 1]

        self.levels: List[_Level] = [None] * self.length
        for i in reversed(range(self.length)):
            self.levels[i] = self._build_level(i)
        presentation.group = self
        log.info(f"Built pc group of order {order} on {self.names}")

    def generator(self, name):
        return self.sizes[self.names.index(name) + 1]

    def generators(self):
        return [self.sizes[i + 1] for i in range(self.length)]

    def lookup(self, start=0):
        """Generator name -> element, for the generators of N_start."""
        return {self.names[j]: self.sizes[j + 1] for j in range(start, self.length)}

    def _build_level(self, i):
        presentation = self.presentation
        q = self.relative_orders[i]
        s = self.sizes[i + 1]
        tail = _Tail(self, i + 1)
        lookup = self.lookup(i + 1)

        power_word = presentation.powers[i]
        try:
            w = evaluate_word(power_word, tail, lookup)
        except UnresolvedWord as e:
            raise UnresolvedWord(f"power relation of {self.names[i]}: {e}")

        images = {}
        deferred = []
        for j in range(i + 1, self.length):
            node = presentation.conjugates.get((j, i))
            if node is not None:
                try:
                    images[j] = evaluate_word(node, tail, lookup)
                except UnresolvedWord as e:
                    raise UnresolvedWord(f"conjugate of {self.names[j]} by {self.names[i]}: {e}")
            elif j in presentation.defines:
                deferred.append(j)
            else:
                images[j] = self.sizes[j + 1]
        for j in deferred:
            source, exponent = presentation.defines[j]
            if source > i:
                # the source generator sits inside N_{i+1}: conjugate it, then take the power
                images[j] = int(tail.power(images[source], exponent))
            else:
                images[j] = self.sizes[j + 1]

        phi = self._automorphism_table(i, images)
        P = np.empty((q, s), dtype=np.int64)
        P[0] = np.arange(s, dtype=np.int64)
        for b in range(1, q):
            P[b] = phi[P[b - 1]]
        Lw = np.asarray(self._mul_from(i + 1, np.full(s, w, dtype=np.int64),
                                       np.arange(s, dtype=np.int64)), dtype=np.int64)
        return _Level(self.names[i], q, s, int(w), images, phi, P, Lw)

    def _automorphism_table(self, i, images):
        s = self.sizes[i + 1]
        phi = np.zeros(s, dtype=np.int64)
        for j in reversed(range(i + 1, self.length)):
            below = self.sizes[j + 1]
            q = self.relative_orders[j]
            powers = np.zeros(q, dtype=np.int64)
            for a in range(1, q):
                powers[a] = self._mul_from(i + 1, powers[a - 1], images[j])
            lead = np.repeat(powers[1:], below)
            rest = np.tile(phi[:below], q - 1)
            phi[below:below * q] = self._mul_from(i + 1, lead, rest)
        return phi

    def _mul_from(self, start, a, b):
        scalar = np.ndim(a) == 0 and np.ndim(b) == 0
        A, B = np.broadcast_arrays(as_index_array(a), as_index_array(b))
        out = np.zeros(A.shape, dtype=np.int64)
        for i in range(start, self.length):
            level = self.levels[i]
            s = level.size_below
            ea, n = np.divmod(A, s)
            eb, m = np.divmod(B, s)
            x = level.P[eb, n]
            c = ea + eb
            over = c >= level.q
            if over.any():
                x = np.where(over, level.Lw[x], x)
                c = np.where(over, c - level.q, c)
            out += c * s
            A, B = x, m
        return int(out[0]) if scalar else out

    def _inv_from(self, start, a):
        scalar = np.ndim(a) == 0
        A = as_index_array(a).copy()
        out = np.zeros(A.shape, dtype=np.int64)
        for i in range(start, self.length):
            level = self.levels[i]
            s = level.size_below
            ea, n = np.divmod(A, s)
            c = (level.q - ea) % level.q
            y = level.P[c, n]
            y = np.where(ea > 0, level.Lw[y], y)
            out += c * s
            A = y
        return int(out[0]) if scalar else out

    def mul(self, a, b):
        return self._mul_from(0, a, b)

    def inv(self, a):
        return self._inv_from(0, a)

    def level_exponents(self, g):
        """Exponent of each level generator in the normal form of g."""
        g = int(g)
        out = []
        for i in range(self.length):
            a, g = divmod(g, self.sizes[i + 1])
            out.append(a)
        return tuple(out)

    def exponents(self, g):
        """Exponent vector over the pc generators, each of relative order p."""
        vector = []
        for i, a in enumerate(self.level_exponents(g)):
            for _ in range(self.presentation.exponents[i]):
                a, digit = divmod(a, self.prime)
                vector.append(digit)
        return tuple(vector)

    def pc_generators(self):
        """The chain x_i, x_i^p, ..., in pc order; each has relative order p."""
        gens = []
        for i in range(self.length):
            for t in range(self.presentation.exponents[i]):
                gens.append(self.prime ** t * self.sizes[i + 1])
        return gens

    def word_value(self, node):
        return evaluate_word(node, self, self.lookup())

    def __repr__(self):
        return f"PcGroup(p={self.prime}, order={self.order}, generators={self.names})"
