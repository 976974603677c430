"""Running suites on a pool of worker threads."""

from __future__ import annotations
from typing import Sequence
import time
import logging
import concurrent.futures
from ._config import VerifyConfig
from ._report import CheckResult, SuiteReport, VerificationReport
from ._suites import Check, SUITES, ALIASES, resolve_suite

__all__ = [
    "run_check",
    "run_suites",
]

logger = logging.getLogger(__name__)


def run_check(check: Check, anchor: None | str = None) -> list[CheckResult]:
    """
    Evaluate a check and convert its outcome into results.

    An exception raised by the check is recorded as a failing result
    instead of aborting the run. Every result carries ``anchor``, the
    statement of the suite that built the check.
    """
    start = time.perf_counter()
    try:
        outcome = check.run()
    except (ArithmeticError, ValueError, TypeError) as e:
        logger.exception("check %r raised", check.description)
        return [
            CheckResult(
                description=check.description,
                residual=None,
                tolerance=check.tolerance,
                exact=check.exact,
                error=f"{type(e).__name__}: {e}",
                wall_time=time.perf_counter() - start,
                anchor=anchor,
            )
        ]
    elapsed = time.perf_counter() - start

    if isinstance(outcome, dict):
        items = [(f"{check.description}: {name}", residual, {}) for name, residual in outcome.items()]
    elif isinstance(outcome, tuple):
        residual, values = outcome
        items = [(check.description, residual, values)]
    else:
        items = [(check.description, outcome, {})]

    result = []
    for description, residual, values in items:
        residual = float(residual)
        valid = residual >= 0
        result.append(CheckResult(
            description=description,
            residual=residual if valid else None,
            tolerance=check.tolerance,
            exact=check.exact,
            values=dict(values),
            error=None if valid else f"invalid residual {residual}",
            wall_time=elapsed,
            anchor=anchor,
        ))
    for r in result:
        logger.debug("%s: residual %s, passed %s", r.description, r.residual, r.passed)
    return result


def run_suites(config: VerifyConfig, names: Sequence[str]) -> VerificationReport:
    """
    Run the named suites with ``config.jobs`` worker threads.

    Every check of every suite is a separate task, results are collected
    in catalogue order.

    Parameters
    ----------
    config
        The shared parameters.
    names
        Names from :data:`SUITES` or :data:`ALIASES`. A suite named twice
        runs once.
    """
    unknown = [name for name in names if name not in SUITES and name not in ALIASES]
    if unknown:
        raise ValueError(f"unknown suites {unknown}, expected some of {[*SUITES, *ALIASES]}")
    names = list(dict.fromkeys(resolve_suite(name) for name in names))

    start = time.perf_counter()
    report = VerificationReport(parameters=config.parameters())
    with concurrent.futures.ThreadPoolExecutor(max_workers=config.jobs) as executor:
        pending = []
        for name in names:
            suite = SUITES[name]
            checks = suite.build(config)
            logger.debug("suite %s has %d checks", name, len(checks))
            pending.append((suite, [executor.submit(run_check, check, suite.anchor) for check in checks]))
        for suite, futures in pending:
            results = [r for future in futures for r in future.result()]
            suite_report = SuiteReport(
                name=suite.name,
                anchor=suite.anchor,
                checks=results,
                wall_time=sum(r.wall_time for r in results),
            )
            logger.info(
                "%s: %s, largest residual %.3g",
                suite.name,
                "passed" if suite_report.passed else "FAILED",
                suite_report.residual,
            )
            report.suites.append(suite_report)
    report.wall_time = time.perf_counter() - start
    return report
