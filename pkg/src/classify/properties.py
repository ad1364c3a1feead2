"""
Facts every A_2 or A_3 group satisfies, checked on computed instances.

Each check gives a PropertyCheck; a property that does not apply to the
instance (wrong t, wrong d, ...) is left out rather than reported as passing.
"""
from dataclasses import dataclass
from functools import reduce
from itertools import combinations

import numpy as np

from src.classify.alpha import alpha1_bruteforce, minimal_nonabelian_subgroups
from src.classify.at_index import at_index, mu_triple
from src.structure.characteristic import (center, derived_subgroup, frattini,
                                          is_abelian)
from src.structure.invariants import (d, exponent, log_p, nilpotency_class)
from src.structure.metacyclic import is_metacyclic
from src.subgroups.lattice import DEFAULT_MAX_SUBGROUPS, maximal_subgroups
from src.subgroups.subgroup import as_subgroup, join

FRATTINI_INTERSECTION_MAX_ORDER = 3 ** 6


@dataclass
class PropertyCheck:
    name: str
    holds: bool
    detail: str = ""

    def to_dict(self):
        return {"name": self.name, "holds": self.holds, "detail": self.detail}


def _abelian_maximal_checks(H):
    p = H.prime
    abelian = [M for M in maximal_subgroups(H) if is_abelian(M)]
    checks = [PropertyCheck("abelian_maximal_count", len(abelian) in (0, 1, p + 1),
                            f"{len(abelian)} abelian maximal subgroups")]
    if abelian:
        expected = p * derived_subgroup(H).order * center(H).order
        checks.append(PropertyCheck("order_from_abelian_maximal", H.order == expected,
                                    f"|G| = {H.order}, p|G'||Z(G)| = {expected}"))
    return checks


def _derived_pair_check(H):
    """|G'| <= p |M1' M2'| for every pair of distinct maximal subgroups."""
    p, target = H.prime, derived_subgroup(H).order
    derived = [derived_subgroup(M) for M in maximal_subgroups(H)]
    for (i, A), (j, B) in combinations(enumerate(derived), 2):
        size = join(A, B).order
        if target > p * size:
            return PropertyCheck("derived_pair_bound", False,
                                 f"maximal subgroups {i} and {j}: |M1'M2'| = {size}, |G'| = {target}")
    return PropertyCheck("derived_pair_bound", True, f"{len(derived)} maximal subgroups")


def _frattini_intersection_check(H):
    members = [M.elements for M in maximal_subgroups(H)]
    common = reduce(np.intersect1d, members) if members else H.elements
    return PropertyCheck("frattini_is_intersection",
                         np.array_equal(common, frattini(H).elements),
                         f"|Phi| = {frattini(H).order}, intersection {common.size}")


def _alpha_bounds(H, alpha1):
    p, dim = H.prime, d(H)
    checks = [PropertyCheck("alpha1_range", p ** 2 <= alpha1 <= p ** 4 + p ** 3 + p ** 2 + p,
                            f"alpha_1 = {alpha1}")]
    if p > 2:
        checks.append(PropertyCheck("alpha1_odd_bound", alpha1 <= p ** 4 + p ** 3 + p ** 2,
                                    f"alpha_1 = {alpha1}"))
    if dim == 2:
        checks.append(PropertyCheck("alpha1_two_generator_bound", alpha1 <= p ** 3 + 2 * p ** 2 + p,
                                    f"alpha_1 = {alpha1}"))
    else:
        checks.append(PropertyCheck("alpha1_lower_bound", alpha1 >= 2 * p ** 2 - 1,
                                    f"d = {dim}, alpha_1 = {alpha1}"))
    if alpha1 == p ** 2:
        has_abelian = any(is_abelian(M) for M in maximal_subgroups(H))
        checks.append(PropertyCheck("alpha1_minimum_structure",
                                    dim == 2 and nilpotency_class(H) == 4 and has_abelian,
                                    f"d = {dim}, c = {nilpotency_class(H)}, abelian maximal: {has_abelian}"))
    return checks


def _a3_checks(H, alpha1, max_subgroups):
    p = H.prime
    derived = derived_subgroup(H)
    Phi, Z = frattini(H), center(H)
    dim, c = d(H), nilpotency_class(H)
    checks = [
        PropertyCheck("class_bound", c <= 4, f"c = {c}"),
        PropertyCheck("derived_order_bound", derived.order <= p ** 4, f"|G'| = {derived.order}"),
        PropertyCheck("derived_exponent_bound", exponent(derived) <= p ** 3,
                      f"exp(G') = {exponent(derived)}"),
    ]
    if derived.order == p ** 4:
        checks.append(PropertyCheck("derived_p4_structure",
                                    is_abelian(derived) and not is_metacyclic(derived),
                                    "G' of order p^4 is abelian and not metacyclic"))
    if not is_abelian(Phi):
        checks.append(PropertyCheck("nonabelian_frattini_metacyclic", is_metacyclic(Phi),
                                    f"|Phi| = {Phi.order}"))
    if p > 2:
        checks.append(PropertyCheck("odd_frattini_metacyclic", (not is_abelian(Phi)) == is_metacyclic(H),
                                    f"Phi abelian: {is_abelian(Phi)}"))
    central_frattini = Phi.issubset(Z)
    if dim == 3 and central_frattini:
        mu = mu_triple(H, max_subgroups)
        checks.append(PropertyCheck("alpha1_from_mu", alpha1 == mu.mu1 + p ** 2 * mu.mu2,
                                    f"alpha_1 = {alpha1}, mu = {mu.as_tuple()}"))
    if dim == 4:
        elementary = is_abelian(derived) and exponent(derived) <= p and derived.order <= p ** 3
        contained = all(Phi.issubset(K) for K in minimal_nonabelian_subgroups(H, max_subgroups).values())
        checks.append(PropertyCheck("four_generator_structure",
                                    c == 2 and central_frattini and elementary and contained,
                                    f"c = {c}, Phi <= Z: {central_frattini}, |G'| = {derived.order}"))
    return checks + _alpha_bounds(H, alpha1)


def global_properties(G, max_subgroups=DEFAULT_MAX_SUBGROUPS):
    """All applicable property checks for a non-abelian G."""
    H = as_subgroup(G)
    if is_abelian(H):
        return []
    p = H.prime
    t = at_index(H, max_subgroups).t
    checks = _abelian_maximal_checks(H) + [_derived_pair_check(H)]
    if H.order <= FRATTINI_INTERSECTION_MAX_ORDER:
        checks.append(_frattini_intersection_check(H))
    if is_metacyclic(H):
        derived_order = derived_subgroup(H).order
        checks.append(PropertyCheck("metacyclic_index", t == log_p(derived_order, p),
                                    f"t = {t}, |G'| = {derived_order}"))
    if t == 2 and d(H) == 3 and derived_subgroup(H).order == p:
        alpha1 = alpha1_bruteforce(H, max_subgroups)
        checks.append(PropertyCheck("a2_small_derived_alpha1", alpha1 == p ** 2, f"alpha_1 = {alpha1}"))
    if t == 3:
        checks += _a3_checks(H, alpha1_bruteforce(H, max_subgroups), max_subgroups)
    return checks
