"""
Text reports for verification runs and single-group analyses.
"""
from typing import Any, Dict, List

import jinja2

from src.analysis.constants import ANALYSIS_TEMPLATE, FINDINGS_TEMPLATE, REPORT_SETTINGS
from src.data.models import REPORT_VERSION, ClaimStatus
from src.structure.invariants import log_p


class ReportGenerator:
    """Findings report of one VerificationSummary."""

    def __init__(self, summary):
        self.summary = summary

    def generate_overview(self) -> Dict[str, Any]:
        data = self.summary.to_dict()
        return {
            "entries": data["entries"],
            "instances": data["instances"],
            "failed_properties": data["failed_properties"],
        }

    def collect(self, status: ClaimStatus) -> List[Dict[str, Any]]:
        return [record.to_dict() for report in self.summary.reports
                for record in report.claims if record.status is status]

    def failed_properties(self) -> List[Dict[str, Any]]:
        return [{"entry_id": report.entry_id, "assignment": report.assignment, **check.to_dict()}
                for report in self.summary.reports for check in report.failed_properties]

    def render_findings(self) -> str:
        template = jinja2.Template(FINDINGS_TEMPLATE, keep_trailing_newline=True)
        return template.render(
            version=REPORT_VERSION,
            primes=self.summary.primes,
            pattern=self.summary.pattern,
            overview=self.generate_overview(),
            counts=self.summary.counts(),
            duration=self.summary.get_duration(),
            mismatches=self.collect(ClaimStatus.MISMATCH),
            properties=self.failed_properties(),
            skipped=self.collect(ClaimStatus.SKIPPED)[:REPORT_SETTINGS['max_listed_skips']],
            collisions=[c.to_dict() for c in self.summary.collisions],
            errors=self.summary.infrastructure_errors,
        )


def render_analysis(name, record, prime, verdict, mu, alpha1, a1_type=None, relations=()):
    """Console block for one analysed presentation."""
    template = jinja2.Template(ANALYSIS_TEMPLATE)
    return template.render(name=name, record=record, verdict=verdict, mu=mu, alpha1=alpha1,
                           a1_type=a1_type, relations=list(relations), prime=prime,
                           size=log_p(record.order, prime))
