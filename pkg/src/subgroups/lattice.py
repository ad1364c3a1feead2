"""
Subgroup families of p-groups: maximal subgroups, the Gamma_i layers above the
Frattini subgroup, and all subgroups of a given index.

Every subgroup containing Phi(H) is the preimage of a subspace of
H/Phi(H) = F_p^d. Each element gets coordinates in that space once, and a
layer member is then a boolean mask "A . coords = 0" for a matrix A in
reduced row echelon form.
"""
from itertools import combinations, product

import numpy as np

from src.structure.characteristic import frattini
from src.subgroups.errors import LatticeGuardExceeded
from src.subgroups.subgroup import (Subgroup, as_subgroup, contains,
                                    element_with_coordinates)
from src.utils.logger import log

DEFAULT_MAX_SUBGROUPS = 10 ** 5


def frattini_coordinates(G):
    """(Phi, basis, elements, coords): coords[k] is the F_p^d vector of elements[k]."""
    H = as_subgroup(G)
    if "coordinates" in H.cache:
        return H.cache["coordinates"]
    parent, p = H.parent, H.prime
    phi = frattini(H)
    basis = []
    span = phi.elements
    for g in H.gens:
        if not contains(span, [g])[0]:
            basis.append(g)
            span = parent.closure(phi.gens + basis)
    dim = len(basis)
    elements = phi.elements
    coords = np.zeros((elements.size, dim), dtype=np.int64)
    for t in reversed(range(dim)):
        blocks, block_coords = [elements], [coords]
        step = elements
        for c in range(1, p):
            step = np.atleast_1d(parent.mul(basis[t], step))
            shifted = coords.copy()
            shifted[:, t] = c
            blocks.append(step)
            block_coords.append(shifted)
        elements = np.concatenate(blocks)
        coords = np.concatenate(block_coords)
    order = np.argsort(elements)
    result = (phi, basis, elements[order], coords[order])
    H.cache["coordinates"] = result
    return result


def _kernel_basis(rows, dim, p):
    """Basis of {v : rows . v = 0} for rows in reduced row echelon form."""
    pivots = [int(np.flatnonzero(row)[0]) for row in rows]
    basis = []
    for free in (c for c in range(dim) if c not in pivots):
        v = np.zeros(dim, dtype=np.int64)
        v[free] = 1
        for row, pivot in zip(rows, pivots):
            v[pivot] = (-row[free]) % p
        basis.append(v)
    return basis


def _echelon_matrices(dim, rank, p):
    """Every rank x dim matrix over F_p in reduced row echelon form."""
    for pivots in combinations(range(dim), rank):
        slots = [(r, c) for r, pivot in enumerate(pivots)
                 for c in range(pivot + 1, dim) if c not in pivots]
        for values in product(range(p), repeat=len(slots)):
            A = np.zeros((rank, dim), dtype=np.int64)
            for r, pivot in enumerate(pivots):
                A[r, pivot] = 1
            for (r, c), value in zip(slots, values):
                A[r, c] = value
            yield A


def _layer_member(H, rows):
    phi, basis, elements, coords = frattini_coordinates(H)
    p = H.prime
    mask = np.all((coords @ rows.T) % p == 0, axis=1)
    gens = list(phi.gens) + [element_with_coordinates(H.parent, basis, v)
                             for v in _kernel_basis(rows, len(basis), p)]
    return Subgroup(H.parent, elements[mask], gens)


def maximal_subgroups(G):
    """The (p^d - 1)/(p - 1) subgroups of index p, one per hyperplane of H/Phi(H)."""
    H = as_subgroup(G)
    if "maximal" in H.cache:
        return H.cache["maximal"]
    memo = _parent_memo(H.parent, "maximal")
    if H.fingerprint in memo:
        H.cache["maximal"] = memo[H.fingerprint]
        return memo[H.fingerprint]
    _, basis, _, _ = frattini_coordinates(H)
    result = [_layer_member(H, A) for A in _echelon_matrices(len(basis), 1, H.prime)] if basis else []
    memo.setdefault(H.fingerprint, result)
    H.cache["maximal"] = result
    return result


def gamma_layer(G, i):
    """Subgroups containing Phi(G) of index p^i; there are [d choose i]_p of them."""
    H = as_subgroup(G)
    _, basis, _, _ = frattini_coordinates(H)
    if not 1 <= i <= len(basis):
        raise ValueError(f"layer {i} outside 1..{len(basis)}")
    return [_layer_member(H, A) for A in _echelon_matrices(len(basis), i, H.prime)]


def gaussian_binomial(n, k, p):
    if k < 0 or k > n:
        return 0
    num, den = 1, 1
    for j in range(k):
        num *= p ** (n - j) - 1
        den *= p ** (j + 1) - 1
    return num // den


def _parent_memo(parent, name):
    memos = getattr(parent, "_lattice_memo", None)
    if memos is None:
        memos = {}
        parent._lattice_memo = memos
    return memos.setdefault(name, {})


def subgroups_of_index(G, t, max_subgroups=DEFAULT_MAX_SUBGROUPS):
    """Every subgroup of index p^t, each once, by descent through maximal subgroups."""
    H = as_subgroup(G)
    if t < 0:
        raise ValueError("t must be non-negative")
    level = {H.fingerprint: H}
    for step in range(t):
        following = {}
        for K in level.values():
            for M in maximal_subgroups(K):
                following.setdefault(M.fingerprint, M)
                if len(following) > max_subgroups:
                    raise LatticeGuardExceeded(len(following), max_subgroups)
        level = following
        log.info(f"Index p^{step + 1}: {len(level)} subgroups of order {H.order // H.prime ** (step + 1)}")
    return sorted(level.values(), key=lambda K: K.fingerprint)


def subgroups_by_extension(G, order, max_subgroups=DEFAULT_MAX_SUBGROUPS):
    """Oracle: all subgroups of a given order, grown one generator at a time from 1.

    Closes every subgroup found so far with one more element, starting from the
    cyclic subgroups, and never uses maximal-subgroup structure.
    """
    H = as_subgroup(G)
    parent = H.parent
    trivial = Subgroup(parent, np.zeros(1, dtype=np.int64), [])
    found = {trivial.fingerprint: trivial}
    frontier = [trivial]
    while frontier:
        grown = []
        for K in frontier:
            covered = K.contains(H.elements)
            for position in range(H.order):
                if covered[position]:
                    continue
                x = H.elements[position]
                elements = parent.closure(K.gens + [int(x)])
                # every y in xK gives the same subgroup
                covered |= contains(np.sort(np.atleast_1d(parent.mul(x, K.elements))), H.elements)
                if elements.size > order:
                    continue
                L = Subgroup(parent, elements, K.gens + [int(x)])
                if L.fingerprint not in found:
                    found[L.fingerprint] = L
                    grown.append(L)
                    if len(found) > max_subgroups:
                        raise LatticeGuardExceeded(len(found), max_subgroups)
        frontier = grown
    return sorted((K for K in found.values() if K.order == order), key=lambda K: K.fingerprint)
