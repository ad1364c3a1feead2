"""
Minimal non-abelian (A_1) groups: the three equivalent criteria and Redei's
list Q_8, M_p(n,m) = <a,b | a^(p^n) = b^(p^m) = 1, a^b = a^(1+p^(n-1))> and
M_p(n,m,1) = <a,b,c | a^(p^n) = b^(p^m) = c^p = 1, [a,b] = c central>.
"""
from dataclasses import dataclass
from typing import Optional

from src.classify.errors import ClassificationInvariantError
from src.structure.characteristic import center, derived_subgroup, frattini, is_abelian
from src.structure.invariants import abelian_invariants, d, exponent, log_p, order_census
from src.structure.metacyclic import is_metacyclic
from src.subgroups.lattice import maximal_subgroups
from src.subgroups.subgroup import as_subgroup


def minimal_nonabelian_criteria(G):
    """(all maximal subgroups abelian, d=2 and |G'|=p, d=2 and Phi=Z) for non-abelian G."""
    H = as_subgroup(G)
    two_generated = d(H) == 2
    return (
        all(is_abelian(M) for M in maximal_subgroups(H)),
        two_generated and derived_subgroup(H).order == H.prime,
        two_generated and frattini(H) == center(H),
    )


def is_minimal_nonabelian(G):
    H = as_subgroup(G)
    if "a1" in H.cache:
        return H.cache["a1"]
    if is_abelian(H):
        verdict = False
    else:
        criteria = minimal_nonabelian_criteria(H)
        if len(set(criteria)) != 1:
            raise ClassificationInvariantError(
                f"minimal non-abelian criteria disagree on a group of order {H.order}: {criteria}")
        verdict = criteria[0]
    H.cache["a1"] = verdict
    return verdict


@dataclass(frozen=True)
class A1Type:
    kind: str
    n: Optional[int] = None
    m: Optional[int] = None

    def __str__(self):
        if self.kind == "Q8":
            return "Q8"
        if self.kind == "Mp(n,m)":
            return f"Mp({self.n},{self.m})"
        return f"Mp({self.n},{self.m},1)"


def a1_type(G):
    H = as_subgroup(G)
    if not is_minimal_nonabelian(H):
        raise ClassificationInvariantError("a1_type needs a minimal non-abelian group")
    p = H.prime
    if H.order == 8 and exponent(H) == 4 and order_census(H)[1] == 1:
        return A1Type("Q8")
    x, y = (log_p(e, p) for e in abelian_invariants(H, modulo=derived_subgroup(H)))
    size = log_p(H.order, p)
    if is_metacyclic(H):
        # abelianisation C_(p^(n-1)) x C_(p^m) and exp = p^max(n, m) single out (n, m)
        n, m = (x + 1, y) if log_p(exponent(H), p) == x + 1 else (y + 1, x)
        if n + m == size and n >= 2:
            return A1Type("Mp(n,m)", n, m)
    elif x + y + 1 == size:
        return A1Type("Mp(n,m,1)", x, y)
    raise ClassificationInvariantError(f"no Redei type matches a group of order {H.order}")
