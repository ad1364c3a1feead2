from src.pcgroup.quotient import QuotientGroup
from src.structure.embedding import SubgroupGroup
from src.structure.errors import NotNormalError
from src.subgroups.subgroup import as_subgroup


def quotient(G, N):
    """G/N as a coset-table group; N must be normal in G."""
    H = as_subgroup(G)
    if H.parent is not N.parent or not N.issubset(H):
        raise NotNormalError("N is not a subgroup of G")
    if not N.is_normal_in(H):
        raise NotNormalError(f"subgroup of order {N.order} is not normal")
    if H.order == H.parent.order:
        return QuotientGroup(H.parent, N.elements)
    inner = SubgroupGroup(H)
    return QuotientGroup(inner, inner.localise(N.elements))
