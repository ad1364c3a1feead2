"""
Characteristic subgroups of a p-group or of a subgroup of one.

All functions take a group or a Subgroup and return Subgroups in the parent's
element space. Results are cached on the Subgroup.
"""
import numpy as np

from src.subgroups.subgroup import Subgroup, as_subgroup, normal_closure, span


def _cached(H, key, compute):
    if key not in H.cache:
        H.cache[key] = compute()
    return H.cache[key]


def commutator_subgroup(H, A, B):
    """[A, B] for subgroups A, B normalised by H."""
    parent = H.parent
    seeds = [int(parent.commutator(a, b)) for a in A.gens for b in B.gens]
    return normal_closure(H, [s for s in seeds if s])


def derived_subgroup(G):
    H = as_subgroup(G)
    return _cached(H, "derived", lambda: commutator_subgroup(H, H, H))


def center(G):
    H = as_subgroup(G)

    def compute():
        mask = H.parent.centralises(H.elements, H.gens)
        return Subgroup.from_elements(H.parent, H.elements[mask])
    return _cached(H, "center", compute)


def frattini(G):
    """Phi(H) = H' H^p, the normal closure of p-th powers and commutators of generators."""
    H = as_subgroup(G)

    def compute():
        parent = H.parent
        seeds = [int(parent.power(g, H.prime)) for g in H.gens]
        seeds += [int(parent.commutator(a, b)) for i, a in enumerate(H.gens) for b in H.gens[i + 1:]]
        return normal_closure(H, [s for s in seeds if s])
    return _cached(H, "frattini", compute)


def lower_central_series(G):
    """[H, H_2, ..., 1] with H_{i+1} = [H_i, H]."""
    H = as_subgroup(G)

    def compute():
        series = [H]
        while not series[-1].is_trivial():
            nxt = commutator_subgroup(H, series[-1], H)
            if nxt.order == series[-1].order:
                break
            series.append(nxt)
        return series
    return _cached(H, "lcs", compute)


def omega(G, s):
    """Subgroup generated by the elements of order dividing p^s."""
    if s < 1:
        raise ValueError("s must be at least 1")
    H = as_subgroup(G)

    def compute():
        orders = H.parent.element_orders()[H.elements]
        elements, gens = span(H.parent, H.elements[orders <= H.prime ** s])
        return Subgroup(H.parent, elements, gens)
    return _cached(H, ("omega", s), compute)


def mho(G, s):
    """Subgroup generated by the p^s-th powers."""
    if s < 1:
        raise ValueError("s must be at least 1")
    H = as_subgroup(G)

    def compute():
        powers = np.unique(np.atleast_1d(H.parent.power(H.elements, H.prime ** s)))
        elements, gens = span(H.parent, powers)
        return Subgroup(H.parent, elements, gens)
    return _cached(H, ("mho", s), compute)


def is_abelian(G):
    H = as_subgroup(G)
    return _cached(H, "abelian", lambda: H.parent.is_abelian_set(H.gens) if H.gens else True)
