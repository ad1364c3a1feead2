"""
Data processing utilities for writing verification reports.
"""

import json
from pathlib import Path
from typing import Any, Dict, List, Optional

import pandas as pd

from src.analysis.constants import REPORT_SETTINGS
from src.analysis.reports import ReportGenerator
from src.data.models import ClaimRecord, VerificationSummary
from src.utils.configs import get_output_dir
from src.utils.logger import log

SUMMARY_COLUMNS = ['entry_id', 'assignment', 'p', 'order', 'match', 'mismatch', 'unclaimed',
                   'skipped', 'failed_properties', 'digest']


class ReportOutputManager:
    """Writes the four report files of a verification run."""

    def __init__(self, output_dir: Optional[str] = None):
        self.output_dir = Path(output_dir) if output_dir is not None else get_output_dir()

    def _ensure_dir(self):
        self.output_dir.mkdir(parents=True, exist_ok=True)

    def save_claims_jsonl(self, summary: VerificationSummary,
                          filename: str = REPORT_SETTINGS['claims_file']) -> bool:
        """One JSON record per claim, in report order."""
        try:
            self._ensure_dir()
            with open(self.output_dir / filename, 'w', encoding='utf-8') as f:
                for report in summary.reports:
                    for record in report.claims:
                        f.write(json.dumps(record.to_dict(), sort_keys=True) + "\n")
            log.info(f"Saved claim records to {filename}")
            return True
        except Exception as e:
            log.error(f"Error saving claims {filename}: {e}")
            return False

    def save_summary_json(self, summary: VerificationSummary,
                          filename: str = REPORT_SETTINGS['summary_json']) -> bool:
        try:
            self._ensure_dir()
            with open(self.output_dir / filename, 'w', encoding='utf-8') as f:
                json.dump(summary.to_dict(), f, indent=2, sort_keys=True)
            log.info(f"Saved summary to {filename}")
            return True
        except Exception as e:
            log.error(f"Error saving summary {filename}: {e}")
            return False

    def save_summary_csv(self, summary: VerificationSummary,
                         filename: str = REPORT_SETTINGS['summary_csv']) -> bool:
        """One row per entry and assignment."""
        try:
            self._ensure_dir()
            rows = [report.summary_row() for report in summary.reports]
            df = pd.DataFrame(rows, columns=SUMMARY_COLUMNS)
            df.to_csv(self.output_dir / filename, index=False)
            log.info(f"Saved {len(df)} summary rows to {filename}")
            return True
        except Exception as e:
            log.error(f"Error saving summary CSV {filename}: {e}")
            return False

    def save_findings(self, summary: VerificationSummary,
                      filename: str = REPORT_SETTINGS['findings_file']) -> bool:
        try:
            self._ensure_dir()
            text = ReportGenerator(summary).render_findings()
            with open(self.output_dir / filename, 'w', encoding='utf-8') as f:
                f.write(text)
            log.info(f"Saved findings to {filename}")
            return True
        except Exception as e:
            log.error(f"Error saving findings {filename}: {e}")
            return False

    def save_all(self, summary: VerificationSummary) -> Dict[str, bool]:
        return {
            REPORT_SETTINGS['claims_file']: self.save_claims_jsonl(summary),
            REPORT_SETTINGS['summary_json']: self.save_summary_json(summary),
            REPORT_SETTINGS['summary_csv']: self.save_summary_csv(summary),
            REPORT_SETTINGS['findings_file']: self.save_findings(summary),
        }

    def load_claims(self, filename: str = REPORT_SETTINGS['claims_file']) -> List[ClaimRecord]:
        path = self.output_dir / filename
        if not path.exists():
            return []
        records = []
        with open(path, 'r', encoding='utf-8') as f:
            for line in f:
                if line.strip():
                    records.append(ClaimRecord.from_dict(json.loads(line)))
        return records

    def load_summary(self, filename: str = REPORT_SETTINGS['summary_json']) -> Dict[str, Any]:
        path = self.output_dir / filename
        if not path.exists():
            return {}
        with open(path, 'r', encoding='utf-8') as f:
            return json.load(f)
