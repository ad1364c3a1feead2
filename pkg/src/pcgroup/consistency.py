"""
Consistency checks for pc presentations.

A tower of cyclic extensions is a group exactly when, at every level, the
conjugation map is an automorphism of the subgroup below that fixes the power
word and whose q-th power is conjugation by it. Those conditions are checked
exhaustively; the pc generator triples and a seeded sample of random triples
are then checked for associativity directly.
"""
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from src.pcgroup.group import DEFAULT_MAX_ORDER, PcGroup, _Tail
from src.pcgroup.presentation import ConsistencyStatus
from src.utils.logger import log


@dataclass
class ConsistencyFailure:
    kind: str
    elements: Tuple[int, ...]
    level: Optional[str] = None
    detail: str = ""

    def __str__(self):
        where = f" at level {self.level}" if self.level else ""
        return f"{self.kind} failure{where} on {self.elements}: {self.detail}"


@dataclass
class ConsistencyReport:
    order: int
    pc_triples: int = 0
    sampled_triples: int = 0
    failures: List[ConsistencyFailure] = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    @property
    def first_failure(self):
        return self.failures[0] if self.failures else None


def _first(mask):
    hits = np.flatnonzero(mask)
    return int(hits[0]) if hits.size else None


def _check_level(group, i, report):
    level = group.levels[i]
    tail = _Tail(group, i + 1)
    s = level.size_below
    below = np.arange(s, dtype=np.int64)

    for g in tail.generators():
        lhs = level.phi[np.asarray(tail.mul(below, g), dtype=np.int64)]
        rhs = np.asarray(tail.mul(level.phi[below], level.phi[g]))
        bad = _first(lhs != rhs)
        if bad is not None:
            report.failures.append(ConsistencyFailure(
                "homomorphism", (bad, g), level.name,
                "conjugation does not respect multiplication"))
            return
    if np.unique(level.phi).size != s:
        values, counts = np.unique(level.phi, return_counts=True)
        clash = np.flatnonzero(level.phi == values[counts > 1][0])
        report.failures.append(ConsistencyFailure(
            "bijection", tuple(int(c) for c in clash[:2]), level.name,
            "conjugation is not injective"))
        return
    if level.phi[level.w] != level.w:
        report.failures.append(ConsistencyFailure(
            "power", (level.w,), level.name, "conjugation moves the power word"))
        return
    lhs = level.phi[level.P[level.q - 1]]
    rhs = np.asarray(tail.conjugate(below, level.w))
    bad = _first(lhs != rhs)
    if bad is not None:
        report.failures.append(ConsistencyFailure(
            "power automorphism", (bad, level.w), level.name,
            "q-th power of conjugation differs from conjugation by the power word"))


def _check_triples(group, a, b, c, kind, report):
    lhs = np.asarray(group.mul(group.mul(a, b), c))
    rhs = np.asarray(group.mul(a, group.mul(b, c)))
    bad = _first(lhs != rhs)
    if bad is not None:
        report.failures.append(ConsistencyFailure(
            kind, (int(a[bad]), int(b[bad]), int(c[bad])), None, "(gh)k != g(hk)"))


def check_consistency(target, sample_triples=10 ** 4, seed=20240229, max_order=DEFAULT_MAX_ORDER):
    """Check a PcPresentation (or its built PcGroup) and set its status flag."""
    if isinstance(target, PcGroup):
        group = target
    else:
        group = target.group if target.group is not None else PcGroup(target, max_order)
    presentation = group.presentation
    report = ConsistencyReport(order=group.order)

    for i in reversed(range(group.length)):
        _check_level(group, i, report)
        if not report.ok:
            break

    if report.ok:
        gens = np.asarray(group.pc_generators(), dtype=np.int64)
        overlaps = np.asarray(group.power(gens, group.prime - 1), dtype=np.int64) if gens.size else gens
        pool = np.unique(np.concatenate([gens, overlaps]))
        if pool.size:
            a, b, c = (x.ravel() for x in np.meshgrid(pool, pool, pool, indexing="ij"))
            report.pc_triples = a.size
            _check_triples(group, a, b, c, "pc triple", report)

    if report.ok and group.order > 1 and sample_triples:
        rng = np.random.default_rng(seed)
        a, b, c = rng.integers(0, group.order, size=(3, sample_triples), dtype=np.int64)
        report.sampled_triples = sample_triples
        _check_triples(group, a, b, c, "associativity", report)
        if report.ok:
            bad = _first(np.asarray(group.mul(a, group.inv(a))) != 0)
            if bad is not None:
                report.failures.append(ConsistencyFailure(
                    "inverse", (int(a[bad]),), None, "g * g^-1 != 1"))

    presentation.status = ConsistencyStatus.VERIFIED if report.ok else ConsistencyStatus.FAILED
    if report.ok:
        log.info(f"Presentation of order {group.order} verified "
                 f"({report.pc_triples} pc triples, {report.sampled_triples} sampled)")
    else:
        log.warning(f"Presentation of order {group.order} inconsistent: {report.first_failure}")
    return report
