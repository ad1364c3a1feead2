"""
The A_t index: the least t such that every subgroup of index p^t is abelian.

A non-abelian subgroup of index p^(t-1) always sits inside a maximal subgroup
that is itself A_(t-1), so t(H) = 1 + max t(M) over the maximal subgroups M.
Verdicts are shared between all subgroups of one parent through a memo keyed
by fingerprint.
"""
from dataclasses import dataclass, field
from typing import Optional

from src.classify.errors import ClassificationInvariantError
from src.structure.characteristic import is_abelian
from src.structure.invariants import log_p
from src.subgroups.lattice import (DEFAULT_MAX_SUBGROUPS, _parent_memo,
                                   maximal_subgroups, subgroups_of_index)
from src.subgroups.subgroup import Subgroup, as_subgroup
from src.subgroups.errors import LatticeGuardExceeded


@dataclass
class AtVerdict:
    t: int
    witness: Optional[Subgroup] = None

    def to_dict(self):
        return {"t": self.t, "witness_order": self.witness.order if self.witness is not None else None}


@dataclass
class MuTriple:
    mu0: int = 0
    mu1: int = 0
    mu2: int = 0
    higher: int = 0

    def as_tuple(self):
        return (self.mu0, self.mu1, self.mu2)

    def total(self):
        return self.mu0 + self.mu1 + self.mu2 + self.higher

    def to_dict(self):
        return {"mu0": self.mu0, "mu1": self.mu1, "mu2": self.mu2, "higher": self.higher}


def at_index(G, max_subgroups=DEFAULT_MAX_SUBGROUPS):
    """A_t verdict of G with a non-abelian witness of index p^(t-1).

    Subgroups of order p^2 are abelian, so a non-abelian H of order p^n has
    t(H) <= n - 2; the scan over maximal subgroups stops once that is reached.
    """
    H = as_subgroup(G)
    memo = _parent_memo(H.parent, "at_index")
    if H.fingerprint in memo:
        return memo[H.fingerprint]
    if is_abelian(H):
        verdict = AtVerdict(0)
    else:
        bound = log_p(H.order, H.prime) - 2
        verdict = AtVerdict(1, H)
        if verdict.t < bound:
            for M in maximal_subgroups(H):
                sub = at_index(M, max_subgroups)
                if sub.t + 1 > verdict.t:
                    verdict = AtVerdict(sub.t + 1, sub.witness)
                if verdict.t >= bound:
                    break
    if len(memo) >= max_subgroups:
        raise LatticeGuardExceeded(len(memo), max_subgroups, "A_t verdicts")
    memo[H.fingerprint] = verdict
    return verdict


def at_index_literal(G, max_subgroups=DEFAULT_MAX_SUBGROUPS):
    """The definition read literally: scan index p^0, p^1, ... until all subgroups are abelian."""
    H = as_subgroup(G)
    t = 0
    witness = None
    while True:
        layer = subgroups_of_index(H, t, max_subgroups)
        nonabelian = [K for K in layer if not is_abelian(K)]
        if not nonabelian:
            return AtVerdict(t, witness)
        witness = nonabelian[0]
        t += 1


def check_at_index(G, max_subgroups=DEFAULT_MAX_SUBGROUPS):
    """at_index, cross-checked against the literal definition."""
    verdict = at_index(G, max_subgroups)
    literal = at_index_literal(G, max_subgroups)
    if literal.t != verdict.t:
        raise ClassificationInvariantError(
            f"A_t recursion gives {verdict.t}, literal definition gives {literal.t}")
    return verdict


def mu_triple(G, max_subgroups=DEFAULT_MAX_SUBGROUPS):
    """Tally of the maximal subgroups by A_t index; ``higher`` counts t >= 3."""
    triple = MuTriple()
    for M in maximal_subgroups(G):
        t = at_index(M, max_subgroups).t
        if t == 0:
            triple.mu0 += 1
        elif t == 1:
            triple.mu1 += 1
        elif t == 2:
            triple.mu2 += 1
        else:
            triple.higher += 1
    return triple
