"""
GALLAIKIT Verify

性质验证套件
"""

from gallaikit.verify.suites import (
    SUITE_NAMES,
    SuiteReport,
    Violation,
    prop1_patterns,
    run_bounds,
    run_folklore,
    run_lemmas,
    run_prop1,
    run_suite,
)

__all__ = [
    "SUITE_NAMES",
    "SuiteReport",
    "Violation",
    "prop1_patterns",
    "run_bounds",
    "run_folklore",
    "run_lemmas",
    "run_prop1",
    "run_suite",
]
