from math import comb

from src.pcgroup.errors import NotMetabelian


def _derived_generators(G):
    gens = G.generators()
    seeds = [int(G.commutator(x, y)) for i, x in enumerate(gens) for y in gens[i + 1:]]
    _, derived_gens = G.normal_closure([s for s in seeds if s], gens)
    return derived_gens


def commutator_terms(G, a, b, m, n):
    """{(i, j): [a, b, a (i-1 times), b (j-1 times)]} for 1 <= i <= m, 1 <= j <= n."""
    terms = {}
    first = int(G.commutator(a, b))
    for i in range(1, m + 1):
        current = first
        terms[(i, 1)] = current
        for j in range(2, n + 1):
            current = int(G.commutator(current, b))
            terms[(i, j)] = current
        first = int(G.commutator(first, a))
    return terms


def verify_metabelian_identity(G, a, b, m, n):
    """Whether [a^m, b^n] equals the product of [ia, jb]^(C(m,i) C(n,j))."""
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    if not G.is_abelian_set(_derived_generators(G)):
        raise NotMetabelian("the derived subgroup is not abelian")
    lhs = int(G.commutator(G.power(a, m), G.power(b, n)))
    rhs = 0
    for (i, j), term in commutator_terms(G, a, b, m, n).items():
        if term:
            rhs = int(G.mul(rhs, G.power(term, comb(m, i) * comb(n, j))))
    return lhs == rhs
