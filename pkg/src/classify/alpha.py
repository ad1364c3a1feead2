"""
alpha_1(G): the number of minimal non-abelian subgroups of G, G included.
"""
from math import comb

from src.classify.minimal import is_minimal_nonabelian
from src.structure.characteristic import is_abelian
from src.structure.invariants import d
from src.subgroups.errors import LatticeGuardExceeded
from src.subgroups.lattice import (DEFAULT_MAX_SUBGROUPS, _parent_memo,
                                   gamma_layer, maximal_subgroups)
from src.subgroups.subgroup import as_subgroup
from src.utils.logger import log


def minimal_nonabelian_subgroups(G, max_subgroups=DEFAULT_MAX_SUBGROUPS):
    """{fingerprint: subgroup} of every A_1 subgroup of G.

    Abelian subgroups have no non-abelian subgroups, so the descent only
    enters non-abelian ones and stops at the first A_1 on each chain.
    """
    H = as_subgroup(G)
    memo = _parent_memo(H.parent, "a1_below")
    visited = _parent_memo(H.parent, "a1_visited")
    stack = [H]
    pending = []
    while stack:
        K = stack.pop()
        if K.fingerprint in memo or K.fingerprint in visited:
            continue
        visited[K.fingerprint] = K
        if len(visited) > max_subgroups:
            raise LatticeGuardExceeded(len(visited), max_subgroups, "non-abelian subgroups")
        pending.append(K)
        if is_abelian(K) or is_minimal_nonabelian(K):
            continue
        stack.extend(M for M in maximal_subgroups(K) if M.fingerprint not in memo)
    # a maximal subgroup is smaller than its parent, so ascending order settles children first
    for K in sorted(pending, key=lambda K: K.order):
        if K.fingerprint in memo:
            continue
        if is_abelian(K):
            memo[K.fingerprint] = {}
        elif is_minimal_nonabelian(K):
            memo[K.fingerprint] = {K.fingerprint: K}
        else:
            found = {}
            for M in maximal_subgroups(K):
                found.update(memo[M.fingerprint])
            memo[K.fingerprint] = found
    return memo[H.fingerprint]


def alpha1_bruteforce(G, max_subgroups=DEFAULT_MAX_SUBGROUPS):
    return len(minimal_nonabelian_subgroups(G, max_subgroups))


def alpha1_hall(G, max_subgroups=DEFAULT_MAX_SUBGROUPS):
    """alpha_1 by Hall's enumeration principle over the layers above Phi(G).

    Every proper subgroup lies in some maximal subgroup, and the subgroups
    containing Phi(G) of index p^i enter with weight (-1)^(i-1) p^(i choose 2).
    """
    H = as_subgroup(G)
    p = H.prime
    total = 1 if is_minimal_nonabelian(H) else 0
    for i in range(1, d(H) + 1):
        weight = (-1) ** (i - 1) * p ** comb(i, 2)
        for K in gamma_layer(H, i):
            total += weight * alpha1_bruteforce(K, max_subgroups)
    log.info(f"Hall count for order {H.order}: alpha_1 = {total}")
    return total
