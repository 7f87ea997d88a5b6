"""
Self-verification suite replaying every identity against the brute-force oracles
"""

from .instances import InstanceSet
from .models import CheckResult, SuiteReport
from .reporter import VerificationReporter
from .suite import VerificationSuite

__all__ = ['InstanceSet', 'CheckResult', 'SuiteReport', 'VerificationReporter', 'VerificationSuite']
