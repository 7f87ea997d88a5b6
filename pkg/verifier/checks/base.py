"""
Base class for verification checks
"""

from abc import ABC, abstractmethod
from typing import List
import logging

from config.models import EnumerationBounds, VerifyConfig
from verifier.instances import InstanceSet
from verifier.models import CheckResult

logger = logging.getLogger(__name__)


class BaseCheck(ABC):
    """One identity, replayed over a family of instances"""

    name: str = ""
    claim: str = ""

    def __init__(self, instances: InstanceSet, config: VerifyConfig, bounds: EnumerationBounds):
        self.instances = instances
        self.config = config
        self.bounds = bounds
        self._failures: List[str] = []
        self._notes: List[str] = []
        self._count = 0

    @abstractmethod
    def run(self) -> CheckResult:
        """Evaluate the identity on every instance and summarize"""
        pass

    def record(self, ok: bool, label: str) -> None:
        """Count one instance; failures are logged and the first few kept for the report"""
        self._count += 1
        if not ok:
            logger.error(f"[{self.name}] failed on {label}")
            self._failures.append(label)

    def note(self, text: str) -> None:
        """Context shown in the report detail when the check passes"""
        logger.info(f"[{self.name}] {text}")
        self._notes.append(text)

    def result(self) -> CheckResult:
        if not self._failures:
            return CheckResult(self.name, self.claim, self._count, 0, "; ".join(self._notes))
        detail = "; ".join(self._failures[:3])
        if len(self._failures) > 3:
            detail += f"; ... {len(self._failures) - 3} more"
        return CheckResult(self.name, self.claim, self._count, len(self._failures), detail)
