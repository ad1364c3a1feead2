"""
Whole-catalog runs: task generation, serial or parallel verification, and the
fingerprint collision scan.
"""
from collections import defaultdict
from itertools import combinations

from src.catalog.instances import applies_at
from src.data.models import Collision, VerificationSummary
from src.fp import FAMILY_PARAMETERS, PrimeField, param_equivalent
from src.pcgroup.expressions import evaluate_int
from src.utils.configs import get_envelope
from src.utils.logger import log
from src.verify.Master import Master
from src.verify.Task import generate_tasks
from src.verify.verifier import skipped_report
from src.verify.Worker import Worker


def resolve_envelope(primes, max_order=None):
    """{p: largest order} for the chosen primes; ``max_order`` overrides the configured envelope."""
    if max_order is not None:
        return {p: int(max_order) for p in primes}
    configured = get_envelope()
    return {p: configured[p] for p in primes if p in configured}


def _run_serial(tasks, catalog, guards, oracle_limits, on_result):
    worker = Worker("serial", None, None, 0, {}, guards=guards, oracle_limits=oracle_limits,
                    catalog=catalog)
    results = []
    for task in tasks:
        result = worker.process(task)
        results.append(result)
        if on_result is not None:
            on_result(result)
    return results


def verify_all(catalog, primes, max_order=None, pattern=None, jobs=1, guards=None,
               oracle_limits=None, catalog_dir=None, on_result=None):
    """VerificationSummary of every selected entry at every assignment inside the envelope.

    With ``jobs`` > 1 the tasks go through a Master and its worker processes,
    which reload the catalog from ``catalog_dir``. Report order never depends
    on completion order.
    """
    summary = VerificationSummary(primes=sorted(set(primes)), pattern=pattern)
    summary.start_timer()
    if not primes:
        summary.end_timer()
        return summary

    envelope = resolve_envelope(summary.primes, max_order)
    entries = catalog.select(pattern)
    tasks, uncovered = generate_tasks(entries, summary.primes, envelope)
    for entry in uncovered:
        if not any(applies_at(entry, p) for p in summary.primes):
            continue
        limits = ", ".join(f"{p}: {order}" for p, order in sorted(envelope.items()))
        summary.reports.append(skipped_report(entry.id, "envelope",
                                              f"no admissible assignment within {{{limits}}}"))

    if jobs > 1 and tasks:
        master = Master(n=jobs, catalog_dir=catalog_dir, guards=guards,
                        oracle_limits=oracle_limits, on_result=on_result)
        results = master.run(tasks)
        if len(results) < len(tasks):
            summary.add_error(f"{len(tasks) - len(results)} tasks never returned")
    else:
        results = _run_serial(tasks, catalog, guards, oracle_limits, on_result)

    for result in results:
        if result.success:
            summary.reports.append(result.report)
        else:
            summary.add_error(f"{result.entry_id} at {result.assignment}: {result.error_message}")

    summary.collisions = find_collisions(summary.reports, catalog)
    summary.sort()
    summary.end_timer()
    log.info(f"Verified {len(tasks)} instances of {len(entries)} entries: {summary.counts()}, "
             f"{len(summary.collisions)} collisions, {len(summary.infrastructure_errors)} errors")
    return summary


def family_parameters(entry, parameters):
    """An assignment of ``entry`` read as parameters of its governing family."""
    family = entry.equivalence["family"]
    mapping = entry.equivalence.get("params") or {name: name for name in FAMILY_PARAMETERS[family]}
    return {name: evaluate_int(expr, parameters) for name, expr in mapping.items()}


def _equivalent(entry, first, second):
    """Whether the entry's governing family calls the two assignments isomorphic."""
    if entry is None or not entry.equivalence:
        return False
    return param_equivalent(entry.equivalence["family"], family_parameters(entry, first.parameters),
                            family_parameters(entry, second.parameters), PrimeField(first.p))


def find_collisions(reports, catalog=None):
    """Pairs of instances sharing a (p, order) bucket and a fingerprint.

    Within one entry a pair is expected when the entry names a family whose
    isomorphism condition holds for the two assignments.
    """
    buckets = defaultdict(list)
    for report in reports:
        if report.digest is not None:
            buckets[(report.p, report.order, report.digest)].append(report)
    collisions = []
    for (p, order, digest), members in sorted(buckets.items()):
        members = sorted(members, key=lambda r: r.sort_key)
        for first, second in combinations(members, 2):
            same_entry = first.entry_id == second.entry_id
            entry = None
            if same_entry and catalog is not None and first.entry_id in catalog:
                entry = catalog.get(first.entry_id)
            expected = same_entry and _equivalent(entry, first, second)
            if expected:
                detail = "isomorphic by the family's parameter condition"
            elif same_entry:
                detail = "one entry, two assignments, equal fingerprints"
            else:
                detail = "distinct entries share a fingerprint"
            collisions.append(Collision(p, order, f"{first.entry_id}@{first.assignment}",
                                        f"{second.entry_id}@{second.assignment}", digest,
                                        expected, detail))
    return collisions


def distinctness_scan(catalog, primes, max_order=None, pattern=None, jobs=1, reports=None):
    """Collisions among verified instances; reuses ``reports`` when given."""
    if reports is None:
        reports = verify_all(catalog, primes, max_order, pattern, jobs).reports
    collisions = find_collisions(reports, catalog)
    for collision in collisions:
        if not collision.expected:
            log.warning(f"Fingerprint collision at order {collision.order}: "
                        f"{collision.first} and {collision.second}")
    return collisions
