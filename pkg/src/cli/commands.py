#!/usr/bin/env python3
"""
p-group catalog CLI commands
Command implementations; every method returns the process exit status.
"""

import json
import os
from pathlib import Path

from src.analysis.reports import render_analysis
from src.catalog.entry import CatalogEntry
from src.catalog.errors import CatalogError
from src.catalog.loader import builtin_catalog, load_catalog
from src.classify.alpha import alpha1_bruteforce
from src.classify.at_index import at_index, mu_triple
from src.classify.errors import ClassificationInvariantError
from src.classify.fingerprint import fingerprint
from src.classify.minimal import a1_type, is_minimal_nonabelian
from src.data.models import ClaimStatus
from src.data.processors import ReportOutputManager
from src.fp import PrimeField, count_conic_solutions
from src.fp.errors import FieldError
from src.pcgroup.errors import InconsistentPresentation, PresentationError
from src.pcgroup.template import PresentationTemplate, refine_to_pc
from src.structure.invariants import structure_record
from src.subgroups.errors import LatticeGuardExceeded
from src.utils.configs import get_envelope, get_guards, get_output_dir
from src.utils.logger import log
from src.verify.harness import verify_all

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INTERNAL = 2


class UsageError(Exception):
    """Bad input from the user: a flag, a file or its contents."""


def read_presentation_file(path):
    """(CatalogEntry, params) from a file holding one entry with ``p`` and ``params`` bound."""
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}")
    except json.JSONDecodeError as e:
        raise UsageError(f"{path} is not JSON (line {e.lineno}: {e.msg})")
    if not isinstance(data, dict) or "presentation" not in data:
        raise UsageError(f"{path} needs an object with a 'presentation' block")
    if "p" not in data:
        raise UsageError(f"{path} must bind the prime 'p'")
    params = {"p": int(data["p"])}
    params.update({k: int(v) for k, v in data.get("params", {}).items()})
    entry = CatalogEntry.from_dict({
        "id": data.get("id", path.stem),
        "block": data.get("block", "user"),
        "level": data.get("level", 0),
        "order": str(data.get("order", "0")),
        "presentation": data["presentation"],
        "primes": data.get("primes", "True"),
        "constraints": data.get("constraints", []),
        "parameters": [{"name": name} for name in params if name != "p"],
    })
    return entry, params


class CatalogCommands:
    def __init__(self, catalog_dir=None, output_dir=None):
        self.catalog_dir = catalog_dir
        self.output_dir = output_dir
        self._catalog = None

    def catalog(self):
        if self._catalog is None:
            self._catalog = load_catalog(self.catalog_dir)
        return self._catalog

    def _build(self, path):
        entry, params = read_presentation_file(path)
        presentation = entry.presentation
        resolve = self.catalog().template if "product" in presentation else builtin_catalog().template
        try:
            template = PresentationTemplate.from_dict(presentation, resolve=resolve,
                                                      parameters=entry.parameter_names,
                                                      constraints=entry.all_constraints,
                                                      residues=entry.residues())
        except (PresentationError, CatalogError) as e:
            raise UsageError(f"{path}: {e}")
        guards = get_guards()
        group = refine_to_pc(template, params, guards["max_group_order"],
                             guards["sample_triples"], guards["seed"]).group
        return entry, params, group

    def analyze(self, path):
        """Print the structure record, A_t verdict and alpha_1 of a presentation file."""
        try:
            entry, params, G = self._build(path)
            guard = get_guards()["max_subgroups"]
            record = structure_record(G)
            verdict = at_index(G, guard)
            mu = mu_triple(G, guard).as_tuple() if verdict.t >= 2 else None
            alpha1 = alpha1_bruteforce(G, guard)
            kind = str(a1_type(G)) if is_minimal_nonabelian(G) else None
        except UsageError as e:
            print(f"❌ {e}")
            return EXIT_USAGE
        except InconsistentPresentation as e:
            print(f"❌ {path} does not present a group of the stated order: {e}")
            return EXIT_USAGE
        except PresentationError as e:
            print(f"❌ {path}: {e}")
            return EXIT_USAGE
        except LatticeGuardExceeded as e:
            print(f"⚠️  Subgroup guard reached: {e}")
            return EXIT_USAGE
        except ClassificationInvariantError as e:
            log.error(f"Invariant violated while analysing {path}: {e}")
            print(f"❌ Internal invariant violated: {e}")
            return EXIT_INTERNAL
        text = render_analysis(entry.id, record, params["p"], verdict, mu, alpha1, kind,
                               G.presentation.describe())
        print(f"🔍 {text}")
        return EXIT_OK

    def fingerprint(self, path):
        try:
            entry, _, G = self._build(path)
            fp = fingerprint(G, get_guards()["max_subgroups"])
        except (UsageError, PresentationError) as e:
            print(f"❌ {e}")
            return EXIT_USAGE
        except LatticeGuardExceeded as e:
            print(f"⚠️  Subgroup guard reached: {e}")
            return EXIT_USAGE
        except ClassificationInvariantError as e:
            print(f"❌ Internal invariant violated: {e}")
            return EXIT_INTERNAL
        print(f"🔍 {entry.id}: {fp.digest()}")
        for key, value in fp.to_dict().items():
            print(f"  {key}: {value}")
        return EXIT_OK

    def fp_conic(self, p, r, u):
        """Number of solutions of x^2 + r y^2 = u over F_p."""
        try:
            F = PrimeField(p)
            count = count_conic_solutions(r, u, F)
        except FieldError as e:
            print(f"❌ {e}")
            return EXIT_USAGE
        print(count)
        return EXIT_OK

    def catalog_list(self, pattern=None):
        try:
            entries = self.catalog().select(pattern)
        except CatalogError as e:
            print(f"❌ Catalog error: {e}")
            return EXIT_USAGE
        if not entries:
            print(f"❌ No catalog entries match {pattern!r}")
            return EXIT_OK
        print(f"📋 {len(entries)} entries")
        for entry in entries:
            names = ",".join(entry.parameter_names) or "-"
            print(f"{entry.id:<6} {entry.block:<3} primes: {entry.primes:<28} params: {names:<12} "
                  f"order: {entry.order}")
        return EXIT_OK

    def _print_progress(self, result):
        if not result.success:
            print(f"❌ {result.entry_id} [{result.assignment}] {result.error_message}")
            return
        report = result.report
        mismatches = report.count(ClaimStatus.MISMATCH)
        skipped = report.count(ClaimStatus.SKIPPED)
        failed = len(report.failed_properties)
        marker = "✅" if not (mismatches or failed) else "⚠️ "
        line = (f"{marker} {report.entry_id} [{report.assignment}] order {report.order}: "
                f"{report.count(ClaimStatus.MATCH)} match, {mismatches} mismatch")
        if skipped:
            line += f", {skipped} skipped"
        if failed:
            line += f", {failed} failed properties"
        print(line)

    def catalog_verify(self, primes=None, max_order=None, pattern=None, jobs=None, output=None):
        """Verify the selected entries and write the report files.

        Without ``primes`` every prime of the configured envelope is verified.
        """
        primes = primes or sorted(get_envelope())
        jobs = jobs or os.cpu_count() or 1
        output = Path(output) if output else (Path(self.output_dir) if self.output_dir else get_output_dir())
        try:
            catalog = self.catalog()
        except CatalogError as e:
            print(f"❌ Catalog error: {e}")
            return EXIT_USAGE
        print(f"📋 Verifying {pattern or 'all entries'} for p in {sorted(set(primes))}"
              f"{f' up to order {max_order}' if max_order else ''} with {jobs} jobs")
        print("⏳ Starting verification...")
        try:
            summary = verify_all(catalog, primes, max_order=max_order, pattern=pattern, jobs=jobs,
                                 catalog_dir=self.catalog_dir, on_result=self._print_progress)
        except ClassificationInvariantError as e:
            log.error(f"Invariant violated during verification: {e}")
            print(f"❌ Internal invariant violated: {e}")
            return EXIT_INTERNAL
        for report in summary.reports:
            if report.assignment is None:
                print(f"⚠️  {report.entry_id} skipped: {report.claims[0].detail}")

        written = ReportOutputManager(output).save_all(summary)
        counts = summary.counts()
        print(f"📋 {counts['Match']} match, {counts['Mismatch']} mismatch, "
              f"{counts['Unclaimed']} unclaimed, {counts['Skipped']} skipped; "
              f"{summary.failed_properties} failed properties; "
              f"{sum(1 for c in summary.collisions if not c.expected)} unexpected collisions")
        for name, ok in written.items():
            print(f"{'✅' if ok else '❌'} {output / name}")
        if not summary.clean:
            for error in summary.infrastructure_errors:
                print(f"❌ {error}")
            return EXIT_INTERNAL
        if not all(written.values()):
            return EXIT_INTERNAL
        print("✅ Verification completed")
        return EXIT_OK
