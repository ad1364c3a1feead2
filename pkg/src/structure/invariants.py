"""
Numerical invariants: abelian types, d(G), c(G), exp(G) and the StructureRecord.
"""
from dataclasses import asdict, dataclass
from typing import Optional, Tuple

import numpy as np

from src.pcgroup.base import FiniteGroup
from src.structure.characteristic import (center, derived_subgroup, frattini,
                                          is_abelian, lower_central_series)
from src.structure.errors import NotAbelianError
from src.subgroups.subgroup import as_subgroup, contains


def log_p(n, p):
    e = 0
    while n > 1:
        n //= p
        e += 1
    return e


def _type_from_census(census, p):
    """Abelian invariants from n_j = #{x : x^(p^j) = 1}, j = 0, 1, ..."""
    at_least = [log_p(census[j] // census[j - 1], p) for j in range(1, len(census))]
    exponents = []
    for j, count in enumerate(at_least, start=1):
        following = at_least[j] if j < len(at_least) else 0
        exponents += [j] * (count - following)
    return tuple(sorted((p ** e for e in exponents), reverse=True))


def abelian_invariants(H, modulo=None):
    """Type (p^e1 >= ... >= p^ek) of an abelian H, or of H/N for ``modulo`` = N.

    Read off the element-order census: the number of invariants with e_i >= j
    is log_p of n_j / n_(j-1).
    """
    if isinstance(H, FiniteGroup):
        H = as_subgroup(H)
    if modulo is None and not is_abelian(H):
        raise NotAbelianError(f"abelian invariants of a non-abelian group of order {H.order}")
    p = H.prime
    parent = H.parent
    N = modulo.elements if modulo is not None else np.zeros(1, dtype=np.int64)
    current = H.elements.copy()
    census = []
    while True:
        inside = contains(N, current)
        census.append(int(np.count_nonzero(inside)) // N.size)
        if inside.all():
            break
        current = np.atleast_1d(parent.power(current, p))
    return _type_from_census(census, p)


def d(G):
    H = as_subgroup(G)
    return log_p(H.order // frattini(H).order, H.prime)


def nilpotency_class(G):
    return len(lower_central_series(G)) - 1


def exponent(G):
    H = as_subgroup(G)
    return int(H.parent.element_orders()[H.elements].max())


def order_census(G):
    """Number of elements of order p^0, p^1, ..., exp(G)."""
    H = as_subgroup(G)
    orders = H.parent.element_orders()[H.elements]
    return tuple(int(np.count_nonzero(orders == H.prime ** j))
                 for j in range(log_p(int(orders.max()), H.prime) + 1))


def is_cyclic(G):
    H = as_subgroup(G)
    return exponent(H) == H.order


def _type_or_none(H):
    return abelian_invariants(H) if is_abelian(H) else None


@dataclass
class StructureRecord:
    order: int
    d: int
    c: int
    exponent: int
    derived_order: int
    derived_type: Optional[Tuple[int, ...]]
    center_order: int
    center_type: Tuple[int, ...]
    frattini_order: int
    frattini_type: Optional[Tuple[int, ...]]
    lcs_orders: Tuple[int, ...]
    abelianization_type: Tuple[int, ...]

    def to_dict(self):
        return asdict(self)


def structure_record(G):
    H = as_subgroup(G)
    derived = derived_subgroup(H)
    Z = center(H)
    Phi = frattini(H)
    return StructureRecord(
        order=H.order,
        d=d(H),
        c=nilpotency_class(H),
        exponent=exponent(H),
        derived_order=derived.order,
        derived_type=_type_or_none(derived),
        center_order=Z.order,
        center_type=abelian_invariants(Z),
        frattini_order=Phi.order,
        frattini_type=_type_or_none(Phi),
        lcs_orders=tuple(K.order for K in lower_central_series(H)),
        abelianization_type=abelian_invariants(H, modulo=derived),
    )
