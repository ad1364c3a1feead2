"""
Verification of one catalog entry at one assignment: build the group, compute
every claim, compare with the catalog and check the global facts.

Mismatches are recorded, never raised. Guards turn into Skipped records;
only infrastructure failures (a presentation that does not present a group,
a broken invariant of the engine) escape.
"""
import time

from src.catalog.entry import CLAIM_NAMES
from src.catalog.errors import InadmissibleAssignment
from src.catalog.instances import (alternative_readings, expected_invariants,
                                   instantiate, instantiate_product_factors,
                                   instantiate_product_form)
from src.classify.alpha import alpha1_bruteforce, alpha1_hall
from src.classify.at_index import at_index, at_index_literal
from src.classify.fingerprint import fingerprint
from src.classify.properties import global_properties
from src.data.models import ClaimRecord, ClaimStatus, PropertyRecord, VerificationReport
from src.pcgroup.errors import ConstraintViolation, OrderGuardExceeded, PresentationError
from src.pcgroup.template import echo_relations
from src.structure.characteristic import derived_subgroup, is_abelian
from src.structure.invariants import log_p
from src.subgroups.errors import LatticeGuardExceeded
from src.subgroups.lattice import subgroups_by_extension, subgroups_of_index
from src.utils.configs import get_guards, get_oracle_limits
from src.utils.logger import log
from src.verify.claims import compute_claim, judge


def _guard_values(guards):
    guards = guards or get_guards()
    return (int(guards["max_group_order"]), int(guards["max_subgroups"]),
            int(guards["sample_triples"]), int(guards["seed"]))


def skipped_report(entry_id, guard, detail, assignment=None):
    """A report whose only record is a Skipped claim naming ``guard``."""
    key = assignment.key() if assignment is not None else None
    report = VerificationReport(entry_id, key,
                                p=assignment.p if assignment is not None else None,
                                parameters=assignment.to_dict() if assignment is not None else {})
    report.add_claim(ClaimRecord(entry_id, key or "", "instance", status=ClaimStatus.SKIPPED,
                                 detail=f"{guard}: {detail}"))
    return report


def _witness_detail(G, max_subgroups):
    witness = at_index(G, max_subgroups).witness
    if witness is None:
        return ""
    return f"non-abelian witness of order {witness.order} generated by {witness.gens}"


def _claim_records(report, entry, G, expected, readings, max_subgroups):
    for name in CLAIM_NAMES:
        record = ClaimRecord(entry.id, report.assignment, name, expected=expected.get(name))
        try:
            record.computed = compute_claim(name, G, max_subgroups)
        except LatticeGuardExceeded as e:
            record.status = ClaimStatus.SKIPPED
            record.detail = f"max_subgroups: {e}"
            report.add_claim(record)
            continue
        if name not in expected:
            record.status = ClaimStatus.UNCLAIMED
        else:
            record.status, record.reading = judge(name, record.expected, record.computed,
                                                  readings.get(name, ()))
        if record.status is ClaimStatus.MISMATCH:
            if name == "at":
                record.detail = _witness_detail(G, max_subgroups)
            finding = f"{name}: expected {record.expected}, computed {record.computed}"
            if record.reading:
                finding += f" (agrees with the reading '{record.reading}')"
            report.add_finding(finding)
            log.warning(f"{entry.id} at {report.assignment}: {finding}")
        report.add_claim(record)


def _descent_check(G, p, max_subgroups):
    """Subgroups of index p and p^2 by descent against the generate-and-close oracle."""
    for t in (1, 2):
        if p ** t > G.order:
            break
        descent = {K.fingerprint for K in subgroups_of_index(G, t, max_subgroups)}
        grown = {K.fingerprint for K in subgroups_by_extension(G, G.order // p ** t, max_subgroups)}
        if descent != grown:
            return PropertyRecord("subgroup_descent_agrees", False,
                                  f"index p^{t}: descent {len(descent)}, oracle {len(grown)}")
    return PropertyRecord("subgroup_descent_agrees", True, "index p and p^2")


def _defining_check(G, defining, assignment):
    """The catalog's own relations, evaluated in the built group."""
    try:
        failed = echo_relations(G, defining, assignment.env())
    except PresentationError as e:
        return PropertyRecord("defining_relations_hold", False, f"cannot evaluate: {e}")
    if failed:
        return PropertyRecord("defining_relations_hold", False, f"fails: {'; '.join(failed)}")
    return PropertyRecord("defining_relations_hold", True,
                          f"{len(defining)} relations echoed in the built group")


def _oracle_properties(G, p, limits, max_subgroups):
    checks = []
    if G.order <= limits.get("hall_max_order", {}).get(p, 0):
        hall, brute = alpha1_hall(G, max_subgroups), alpha1_bruteforce(G, max_subgroups)
        checks.append(PropertyRecord("alpha1_methods_agree", hall == brute,
                                     f"Hall count {hall}, direct count {brute}"))
    if G.order <= limits.get("literal_at_index_max_order", {}).get(p, 0):
        recursive, literal = at_index(G, max_subgroups).t, at_index_literal(G, max_subgroups).t
        checks.append(PropertyRecord("at_index_definitions_agree", recursive == literal,
                                     f"recursion {recursive}, definition {literal}"))
    if G.order <= limits.get("subset_pair_max_order", {}).get(p, 0):
        checks.append(_descent_check(G, p, max_subgroups))
    return checks


def _product_level_check(G, factors, kind, max_subgroups):
    """M x A is A_(t+k) for |A| = p^k; M * A with |M'| = p and |A| = p^(k+1) is A_(t+k)."""
    abelian = [group for _, group in factors if is_abelian(group)]
    others = [group for _, group in factors if not is_abelian(group)]
    if not abelian or len(others) != 1:
        return None
    M = others[0]
    p = G.prime
    k = sum(log_p(A.order, p) for A in abelian)
    if kind == "central":
        if len(abelian) != 1 or derived_subgroup(M).order != p:
            return None
        k -= 1
    expected = at_index(M, max_subgroups).t + k
    computed = at_index(G, max_subgroups).t
    return PropertyRecord("product_level", expected == computed,
                          f"factor level plus {k} gives {expected}, product has {computed}")


def _product_form(report, entry, assignment, catalog, digest, guards):
    max_order, max_subgroups, samples, seed = guards
    record = ClaimRecord(entry.id, report.assignment, "product_form", expected=digest)
    if catalog is None:
        record.status = ClaimStatus.SKIPPED
        record.detail = "no catalog to resolve the factors"
        return record, None
    try:
        product = instantiate_product_form(entry, assignment, catalog, max_order, samples, seed)
        factors = instantiate_product_factors(entry, assignment, catalog, max_order, samples, seed)
        product_digest = fingerprint(product, max_subgroups).digest()
    except (ConstraintViolation, InadmissibleAssignment) as e:
        record.status = ClaimStatus.SKIPPED
        record.detail = f"factor inadmissible: {e}"
        return record, None
    except (OrderGuardExceeded, LatticeGuardExceeded) as e:
        record.status = ClaimStatus.SKIPPED
        record.detail = f"guard: {e}"
        return record, None
    record.computed = product_digest
    record.status = ClaimStatus.MATCH if product_digest == digest else ClaimStatus.MISMATCH
    joiner = " x " if entry.product_form["kind"] == "direct" else " * "
    record.detail = joiner.join(label for label, _ in factors)
    if record.status is ClaimStatus.MISMATCH:
        report.add_finding(f"product_form: {record.detail} has another fingerprint")
    level = _product_level_check(product, factors, entry.product_form["kind"], max_subgroups)
    return record, level


def verify_entry(entry, assignment, catalog=None, guards=None, oracle_limits=None):
    """The VerificationReport of ``entry`` at ``assignment``."""
    started = time.time()
    guard_values = _guard_values(guards)
    max_order, max_subgroups, samples, seed = guard_values
    limits = oracle_limits if oracle_limits is not None else get_oracle_limits()

    expected = expected_invariants(entry, assignment)
    readings = alternative_readings(entry, assignment)
    try:
        G = instantiate(entry, assignment, catalog, max_order, samples, seed, check_defining=False)
    except OrderGuardExceeded as e:
        log.warning(f"{entry.id} at {assignment}: skipped, {e}")
        return skipped_report(entry.id, "max_group_order", str(e), assignment)

    report = VerificationReport(entry.id, assignment.key(), p=assignment.p, order=G.order,
                                parameters=assignment.to_dict())
    _claim_records(report, entry, G, expected, readings, max_subgroups)
    report.properties.append(_defining_check(G, entry.presentation.get("defining", []), assignment))
    try:
        for check in global_properties(G, max_subgroups):
            report.properties.append(PropertyRecord(check.name, check.holds, check.detail))
        report.properties += _oracle_properties(G, assignment.p, limits, max_subgroups)
        fp = fingerprint(G, max_subgroups)
        report.fingerprint = fp.to_dict()
        report.digest = fp.digest()
    except LatticeGuardExceeded as e:
        report.add_finding(f"global properties left incomplete: {e}")
        log.warning(f"{entry.id} at {assignment}: {e}")

    if entry.product_form is not None and report.digest is not None:
        record, level = _product_form(report, entry, assignment, catalog, report.digest, guard_values)
        report.add_claim(record)
        if level is not None:
            report.properties.append(level)

    for check in report.failed_properties:
        report.add_finding(f"property {check.name} fails: {check.detail}")
        log.warning(f"{entry.id} at {assignment}: property {check.name} fails ({check.detail})")
    report.elapsed = time.time() - started
    log.info(f"Verified {entry.id} at {assignment}: {report.count(ClaimStatus.MATCH)} match, "
             f"{report.count(ClaimStatus.MISMATCH)} mismatch in {report.elapsed:.2f}s")
    return report

