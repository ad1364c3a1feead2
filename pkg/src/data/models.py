"""
Data models for verification reports: one record per claim, one report per
(entry, assignment) and the summary of a whole run.
"""
from dataclasses import dataclass, field
from datetime import datetime
from enum import Enum
from typing import Any, Dict, List, Optional

REPORT_VERSION = 1


class ClaimStatus(Enum):
    MATCH = "Match"
    MISMATCH = "Mismatch"
    UNCLAIMED = "Unclaimed"
    SKIPPED = "Skipped"


def _plain(value):
    """JSON-friendly copy: tuples become lists, enums their value."""
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {k: _plain(v) for k, v in value.items()}
    return value


@dataclass
class ClaimRecord:
    """Outcome of comparing one claim with the computed value."""

    entry_id: str
    assignment: str
    claim: str
    expected: Any = None
    computed: Any = None
    status: ClaimStatus = ClaimStatus.UNCLAIMED
    reading: Optional[str] = None
    detail: str = ""

    def __post_init__(self):
        if isinstance(self.status, str):
            self.status = ClaimStatus(self.status)

    @property
    def matched(self) -> bool:
        return self.status is ClaimStatus.MATCH

    def to_dict(self) -> Dict[str, Any]:
        return {
            'report_version': REPORT_VERSION,
            'entry_id': self.entry_id,
            'assignment': self.assignment,
            'claim': self.claim,
            'expected': _plain(self.expected),
            'computed': _plain(self.computed),
            'status': self.status.value,
            'reading': self.reading,
            'detail': self.detail,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'ClaimRecord':
        data = {k: v for k, v in data.items() if k != 'report_version'}
        return cls(**data)


@dataclass
class PropertyRecord:
    """A global fact checked on one instance."""

    name: str
    holds: bool
    detail: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {'name': self.name, 'holds': self.holds, 'detail': self.detail}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'PropertyRecord':
        return cls(**data)


@dataclass
class VerificationReport:
    """Everything verified for one entry at one assignment.

    ``assignment`` is None when the entry has no admissible assignment inside
    the envelope; the single Skipped record then names the guard.
    """

    entry_id: str
    assignment: Optional[str]
    p: Optional[int] = None
    order: Optional[int] = None
    parameters: Dict[str, int] = field(default_factory=dict)
    claims: List[ClaimRecord] = field(default_factory=list)
    properties: List[PropertyRecord] = field(default_factory=list)
    fingerprint: Optional[Dict[str, Any]] = None
    digest: Optional[str] = None
    findings: List[str] = field(default_factory=list)
    elapsed: float = 0.0

    def add_claim(self, record: ClaimRecord):
        self.claims.append(record)

    def add_finding(self, finding: str):
        self.findings.append(finding)

    def count(self, status: ClaimStatus) -> int:
        return sum(1 for record in self.claims if record.status is status)

    @property
    def mismatches(self) -> List[ClaimRecord]:
        return [record for record in self.claims if record.status is ClaimStatus.MISMATCH]

    @property
    def failed_properties(self) -> List[PropertyRecord]:
        return [check for check in self.properties if not check.holds]

    @property
    def sort_key(self):
        return (self.entry_id, self.assignment or "")

    def claim(self, name: str) -> Optional[ClaimRecord]:
        for record in self.claims:
            if record.claim == name:
                return record
        return None

    def to_dict(self) -> Dict[str, Any]:
        return {
            'entry_id': self.entry_id,
            'assignment': self.assignment,
            'p': self.p,
            'order': self.order,
            'parameters': dict(self.parameters),
            'claims': [record.to_dict() for record in self.claims],
            'properties': [check.to_dict() for check in self.properties],
            'fingerprint': _plain(self.fingerprint),
            'digest': self.digest,
            'findings': list(self.findings),
            'elapsed': self.elapsed,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'VerificationReport':
        data = dict(data)
        data['claims'] = [ClaimRecord.from_dict(c) for c in data.get('claims', [])]
        data['properties'] = [PropertyRecord.from_dict(c) for c in data.get('properties', [])]
        return cls(**data)

    def summary_row(self) -> Dict[str, Any]:
        """Flat row for the CSV summary."""
        return {
            'entry_id': self.entry_id,
            'assignment': self.assignment or "",
            'p': self.p,
            'order': self.order,
            'match': self.count(ClaimStatus.MATCH),
            'mismatch': self.count(ClaimStatus.MISMATCH),
            'unclaimed': self.count(ClaimStatus.UNCLAIMED),
            'skipped': self.count(ClaimStatus.SKIPPED),
            'failed_properties': len(self.failed_properties),
            'digest': self.digest or "",
        }


@dataclass
class Collision:
    """Two instances of one (p, order) bucket with equal fingerprints."""

    p: int
    order: int
    first: str
    second: str
    digest: str
    expected: bool = False
    detail: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {
            'p': self.p,
            'order': self.order,
            'first': self.first,
            'second': self.second,
            'digest': self.digest,
            'expected': self.expected,
            'detail': self.detail,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Collision':
        return cls(**data)


@dataclass
class VerificationSummary:
    """Result of a verification run."""

    reports: List[VerificationReport] = field(default_factory=list)
    collisions: List[Collision] = field(default_factory=list)
    infrastructure_errors: List[str] = field(default_factory=list)
    primes: List[int] = field(default_factory=list)
    pattern: Optional[str] = None
    start_time: Optional[datetime] = None
    end_time: Optional[datetime] = None

    def start_timer(self):
        self.start_time = datetime.now()

    def end_timer(self):
        self.end_time = datetime.now()

    def get_duration(self) -> Optional[float]:
        if self.start_time and self.end_time:
            return (self.end_time - self.start_time).total_seconds()
        return None

    def add_error(self, error: str):
        self.infrastructure_errors.append(error)

    def sort(self):
        """Order reports by (entry id, assignment), independent of completion order."""
        self.reports.sort(key=lambda report: report.sort_key)
        self.collisions.sort(key=lambda c: (c.p, c.order, c.first, c.second))

    def counts(self) -> Dict[str, int]:
        counts = {status.value: 0 for status in ClaimStatus}
        for report in self.reports:
            for record in report.claims:
                counts[record.status.value] += 1
        return counts

    @property
    def entry_ids(self) -> List[str]:
        return sorted({report.entry_id for report in self.reports})

    @property
    def failed_properties(self) -> int:
        return sum(len(report.failed_properties) for report in self.reports)

    @property
    def clean(self) -> bool:
        """Infrastructure health only; claim mismatches do not count."""
        return not self.infrastructure_errors

    def to_dict(self) -> Dict[str, Any]:
        return {
            'report_version': REPORT_VERSION,
            'primes': list(self.primes),
            'pattern': self.pattern,
            'entries': len(self.entry_ids),
            'instances': sum(1 for r in self.reports if r.assignment is not None),
            'counts': self.counts(),
            'failed_properties': self.failed_properties,
            'statuses': {
                f"{r.entry_id}@{r.assignment}" if r.assignment else r.entry_id: {
                    status.value: r.count(status) for status in ClaimStatus
                }
                for r in self.reports
            },
            'collisions': [c.to_dict() for c in self.collisions],
            'infrastructure_errors': list(self.infrastructure_errors),
            'duration': self.get_duration(),
        }
