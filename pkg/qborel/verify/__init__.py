"""
The ``verify`` command: suites of exact and truncated-numeric checks with
a JSON report.
"""

from ._config import (
    EXACT_TOLERANCE,
    NUMERIC_TOLERANCE,
    UNITARITY_TOLERANCE,
    REPORT_DIR_VARIABLE,
    REPORT_NAME,
    VerifyConfig,
)
from ._report import (
    SCHEMA_VERSION,
    CheckResult,
    SuiteReport,
    VerificationReport,
)
from ._suites import (
    Outcome,
    Check,
    Suite,
    SUITES,
    ALIASES,
    resolve_suite,
    list_suites,
)
from ._run import (
    run_check,
    run_suites,
)
from ._cli import (
    build_parser,
    config_from_args,
    main,
)

__all__ = [
    "EXACT_TOLERANCE",
    "NUMERIC_TOLERANCE",
    "UNITARITY_TOLERANCE",
    "REPORT_DIR_VARIABLE",
    "REPORT_NAME",
    "VerifyConfig",
    "SCHEMA_VERSION",
    "CheckResult",
    "SuiteReport",
    "VerificationReport",
    "Outcome",
    "Check",
    "Suite",
    "SUITES",
    "ALIASES",
    "resolve_suite",
    "list_suites",
    "run_check",
    "run_suites",
    "build_parser",
    "config_from_args",
    "main",
]
