"""
Isomorphism-invariant fingerprints. Equal groups give equal fingerprints; two
catalog entries with equal fingerprints are reported as a collision.
"""
import hashlib
import json
from dataclasses import asdict, dataclass
from typing import Optional, Tuple

from src.classify.alpha import alpha1_bruteforce
from src.classify.at_index import at_index, mu_triple
from src.structure.characteristic import center, derived_subgroup, is_abelian
from src.structure.invariants import (abelian_invariants, d, exponent,
                                      nilpotency_class, order_census)
from src.subgroups.errors import LatticeGuardExceeded
from src.subgroups.lattice import DEFAULT_MAX_SUBGROUPS
from src.subgroups.subgroup import as_subgroup
from src.utils.logger import log


@dataclass(frozen=True)
class Fingerprint:
    order: int
    d: int
    c: int
    exponent: int
    abelianization: Tuple[int, ...]
    center_type: Tuple[int, ...]
    derived_type: Optional[Tuple[int, ...]]
    census: Tuple[int, ...]
    t: Optional[int]
    mu: Optional[Tuple[int, int, int]]
    alpha1: Optional[int]

    def to_dict(self):
        return asdict(self)

    def digest(self):
        return hashlib.sha256(json.dumps(self.to_dict(), sort_keys=True).encode()).hexdigest()


def fingerprint(G, max_subgroups=DEFAULT_MAX_SUBGROUPS):
    """Fingerprint of G; lattice-based fields are None when the guard stops them."""
    H = as_subgroup(G)
    derived = derived_subgroup(H)
    t = mu = alpha1 = None
    try:
        t = at_index(H, max_subgroups).t
        if t >= 2:
            mu = mu_triple(H, max_subgroups).as_tuple()
        alpha1 = alpha1_bruteforce(H, max_subgroups)
    except LatticeGuardExceeded as e:
        log.warning(f"Fingerprint of order {H.order} left partial: {e}")
    return Fingerprint(
        order=H.order,
        d=d(H),
        c=nilpotency_class(H),
        exponent=exponent(H),
        abelianization=abelian_invariants(H, modulo=derived),
        center_type=abelian_invariants(center(H)),
        derived_type=abelian_invariants(derived) if is_abelian(derived) else None,
        census=order_census(H),
        t=t,
        mu=mu,
        alpha1=alpha1,
    )
