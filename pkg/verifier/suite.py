"""
Verification suite: runs the registered checks and collects a report
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence

from common.exceptions import ChromaError
from config.models import RunConfig
from verifier.checks.base import BaseCheck
from verifier.checks.registry import CheckRegistry
from verifier.instances import InstanceSet
from verifier.models import CheckResult, SuiteReport

logger = logging.getLogger(__name__)


class VerificationSuite:
    """
    Replays every registered identity.

    Checks may run on a thread pool; results are always reported in registry
    order, so the report does not depend on the worker count.
    """

    def __init__(self, config: RunConfig, instances: Optional[InstanceSet] = None):
        self.config = config
        self.instances = instances or InstanceSet(config.verify, config.bounds)

    def _create_checks(self, names: Optional[Sequence[str]]) -> List[BaseCheck]:
        checks = []
        for name in names or CheckRegistry.get_available_checks():
            check = CheckRegistry.create_check(name, self.instances, self.config.verify, self.config.bounds)
            if check is None:
                raise ValueError(f"Unknown check: {name}. Available: {CheckRegistry.get_available_checks()}")
            checks.append(check)
        return checks

    @staticmethod
    def _run_check(check: BaseCheck) -> CheckResult:
        logger.info(f"Running check {check.name}")
        try:
            result = check.run()
        except ChromaError as e:
            logger.error(f"Check {check.name} aborted: {e}")
            return CheckResult(check.name, check.claim, 0, 1, f"aborted: {e}")
        status = "passed" if result.passed else "FAILED"
        logger.info(f"Check {check.name} {status} on {result.instances} instances")
        return result

    def run(self, names: Optional[Sequence[str]] = None) -> SuiteReport:
        checks = self._create_checks(names)
        if self.config.workers > 1:
            with ThreadPoolExecutor(max_workers=self.config.workers, thread_name_prefix="verify") as pool:
                results = list(pool.map(self._run_check, checks))
        else:
            results = [self._run_check(check) for check in checks]
        report = SuiteReport(results=results, settings=self.config.verify.to_dict())
        logger.info(f"Verification finished: {len(results) - len(report.failed_checks)}/{len(results)} checks passed")
        return report
