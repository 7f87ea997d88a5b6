"""
Text and JSON rendering of verification reports
"""

import json
import logging

import pandas as pd

from verifier.models import SuiteReport

logger = logging.getLogger(__name__)


class VerificationReporter:
    """Render a SuiteReport; output carries no timestamps so equal runs give equal bytes"""

    COLUMNS = ["check", "instances", "failures", "status", "claim"]

    def to_frame(self, report: SuiteReport) -> pd.DataFrame:
        rows = [r.to_dict() for r in report.results]
        return pd.DataFrame(rows, columns=self.COLUMNS + ["detail"])

    def render_text(self, report: SuiteReport) -> str:
        frame = self.to_frame(report)
        lines = [frame[self.COLUMNS].to_string(index=False)]
        for _, row in frame[frame["status"] == "FAIL"].iterrows():
            lines.append(f"{row['check']}: {row['detail']}")
        if report.passed:
            lines.append(f"ALL {len(report.results)} CHECKS PASSED")
        else:
            lines.append(f"FAILED: {', '.join(report.failed_checks)}")
        return "\n".join(lines)

    def render_json(self, report: SuiteReport) -> str:
        return json.dumps(report.to_dict(), indent=2)

    def render(self, report: SuiteReport, output_format: str = "text") -> str:
        if output_format == "json":
            return self.render_json(report)
        return self.render_text(report)
