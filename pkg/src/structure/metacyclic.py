import numpy as np

from src.structure.characteristic import derived_subgroup
from src.structure.invariants import d, is_cyclic
from src.subgroups.subgroup import as_subgroup, contains


def cyclic_elements(parent, x, n):
    """x^0, x^1, ..., x^(n-1)."""
    powers = np.zeros(1, dtype=np.int64)
    while powers.size < n:
        step = parent.power(x, powers.size)
        powers = np.concatenate([powers, np.atleast_1d(parent.mul(powers, step))])
    return powers[:n]


def _exponent_modulo(H, normal):
    current = H.elements
    exp = 1
    while not contains(normal, current).all():
        current = np.atleast_1d(H.parent.power(current, H.prime))
        exp *= H.prime
    return exp


def is_metacyclic(G):
    """Whether some cyclic normal subgroup has a cyclic quotient.

    Such a subgroup contains G', so only cyclic subgroups over a cyclic G'
    are tried, each once.
    """
    H = as_subgroup(G)
    if is_cyclic(H):
        return True
    if d(H) > 2:
        return False
    derived = derived_subgroup(H)
    if not is_cyclic(derived):
        return False
    parent = H.parent
    p = H.prime
    orders = parent.element_orders()
    candidates = H.elements[np.argsort(-orders[H.elements], kind="stable")]
    seen = np.zeros(parent.order, dtype=bool)
    for x in candidates:
        if x == 0 or seen[x]:
            continue
        n = int(orders[x])
        powers = cyclic_elements(parent, int(x), n)
        units = np.arange(n) % p != 0
        seen[powers[units]] = True
        normal = np.sort(powers)
        if not contains(normal, derived.elements).all():
            continue
        if _exponent_modulo(H, normal) * n == H.order:
            return True
    return False
