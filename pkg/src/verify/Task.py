import time
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from src.catalog.instances import enumerate_small, expected_order
from src.data.models import VerificationReport
from src.utils.logger import log


class VerificationTask:
    def __init__(self, id, entry_id, assignment, priority=0):
        self.id = id
        self.entry_id = entry_id
        self.assignment = assignment
        self.priority = priority
        self.created_at = time.time()

    @property
    def key(self):
        return f"{self.entry_id}@{self.assignment.key()}"

    def __repr__(self):
        return f"VerificationTask({self.id}, {self.key})"


@dataclass
class Result:
    task_id: int
    worker_name: Any
    entry_id: str
    assignment: str
    report: Optional[VerificationReport] = None
    success: bool = True
    error_message: Optional[str] = None
    verified_at: Optional[float] = None
    processing_time: Optional[float] = None
    errors: List[str] = field(default_factory=list)
    metadata: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.verified_at is None:
            self.verified_at = time.time()

    def add_error(self, error: str):
        self.errors.append(error)


def generate_tasks(entries, primes, envelope):
    """Tasks for every admissible assignment inside the envelope, plus the entries left without one.

    ``envelope`` maps each prime to its largest group order. Smaller groups get
    a lower priority number; ids follow (entry, assignment) order.
    """
    tasks = []
    uncovered = []
    for entry in entries:
        assignments = []
        for p in sorted(set(primes)):
            if p in envelope:
                assignments += enumerate_small(entry, envelope[p], [p])
        if not assignments:
            uncovered.append(entry)
            continue
        for assignment in assignments:
            tasks.append(VerificationTask(len(tasks), entry.id, assignment,
                                          priority=expected_order(entry, assignment)))
    log.info(f"Generated {len(tasks)} tasks for {len(entries)} entries, {len(uncovered)} outside the envelope")
    return tasks, uncovered
