"""
Property suites cross-checking every layer against an independent route.
"""

from typeb_fock.verification.models import PropertyResult, SuiteReport
from typeb_fock.verification.runner import SUITES, run_suite

__all__ = [
    "PropertyResult",
    "SuiteReport",
    "SUITES",
    "run_suite",
]
