"""
Data models for the verification suite
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one identity check over its instance family"""
    name: str
    claim: str
    instances: int
    failures: int
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.failures == 0 and self.instances > 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "check": self.name,
            "claim": self.claim,
            "instances": self.instances,
            "failures": self.failures,
            "status": "PASS" if self.passed else "FAIL",
            "detail": self.detail,
        }


@dataclass
class SuiteReport:
    results: List[CheckResult] = field(default_factory=list)
    settings: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return bool(self.results) and all(r.passed for r in self.results)

    @property
    def failed_checks(self) -> List[str]:
        return [r.name for r in self.results if not r.passed]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "passed": self.passed,
            "settings": self.settings,
            "checks": [r.to_dict() for r in self.results],
        }
