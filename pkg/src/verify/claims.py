"""
What each catalog claim means on a built group, and how a computed value is
compared with the expected one.
"""
from src.classify.alpha import alpha1_bruteforce
from src.classify.at_index import at_index, mu_triple
from src.classify.minimal import is_minimal_nonabelian
from src.data.models import ClaimStatus
from src.structure.characteristic import center, derived_subgroup, frattini, is_abelian
from src.structure.invariants import abelian_invariants, d, exponent, nilpotency_class
from src.structure.metacyclic import is_metacyclic
from src.subgroups.lattice import maximal_subgroups
from src.subgroups.subgroup import as_subgroup
from src.verify.errors import UnknownClaim


def _type_or_none(H):
    return abelian_invariants(H) if is_abelian(H) else None


def _a1_maximal_count(G, max_subgroups):
    return sum(1 for M in maximal_subgroups(G) if is_minimal_nonabelian(M))


def _every_maximal_a2(G, max_subgroups):
    return all(at_index(M, max_subgroups).t == 2 for M in maximal_subgroups(G))


def _maximal_d3_noncentral_derived(G, max_subgroups):
    Z = center(G)
    return any(d(M) == 3 and not derived_subgroup(M).issubset(Z) for M in maximal_subgroups(G))


COMPUTERS = {
    "order": lambda G, guard: G.order,
    "at": lambda G, guard: at_index(G, guard).t,
    "mu": lambda G, guard: mu_triple(G, guard).as_tuple(),
    "alpha1": lambda G, guard: alpha1_bruteforce(G, guard),
    "d": lambda G, guard: d(G),
    "c": lambda G, guard: nilpotency_class(G),
    "exponent": lambda G, guard: exponent(G),
    "derived_order": lambda G, guard: derived_subgroup(G).order,
    "derived_type": lambda G, guard: _type_or_none(derived_subgroup(G)),
    "center_type": lambda G, guard: abelian_invariants(center(G)),
    "frattini_type": lambda G, guard: _type_or_none(frattini(G)),
    "metacyclic": lambda G, guard: is_metacyclic(G),
    "has_a1_maximal": lambda G, guard: _a1_maximal_count(G, guard) > 0,
    "has_abelian_maximal": lambda G, guard: any(is_abelian(M) for M in maximal_subgroups(G)),
    "a1_maximal_count": _a1_maximal_count,
    "min_a1_maximal": _a1_maximal_count,
    "frattini_central": lambda G, guard: frattini(G).issubset(center(G)),
    "every_maximal_a2": _every_maximal_a2,
    "every_maximal_two_generated": lambda G, guard: all(d(M) == 2 for M in maximal_subgroups(G)),
    "maximal_d3_noncentral_derived": _maximal_d3_noncentral_derived,
}

# lower bounds; every other claim is compared for equality
AT_LEAST = {"min_a1_maximal"}


def compute_claim(name, G, max_subgroups):
    if name not in COMPUTERS:
        raise UnknownClaim(name)
    value = COMPUTERS[name](as_subgroup(G), max_subgroups)
    if isinstance(value, tuple):
        return tuple(int(v) for v in value)
    return value


def agrees(name, expected, computed):
    if expected is None or computed is None:
        return expected is None and computed is None
    if name in AT_LEAST:
        return computed >= expected
    if isinstance(expected, bool) or isinstance(computed, bool):
        return bool(expected) == bool(computed)
    return expected == computed


def judge(name, expected, computed, readings=()):
    """(status, reading) for one claim; ``readings`` are (label, value) alternatives."""
    if agrees(name, expected, computed):
        return ClaimStatus.MATCH, None
    for label, value in readings:
        if agrees(name, value, computed):
            return ClaimStatus.MISMATCH, label
    return ClaimStatus.MISMATCH, None
