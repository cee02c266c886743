"""Dispatch of the verification suites."""

from __future__ import annotations

import logging
import time
from typing import Callable, Dict, List

from typeb_fock.errors import TypeBFockError
from typeb_fock.runconfig import RunConfig
from typeb_fock.types import VerifySuite
from typeb_fock.verification.fock import run_fock_suite
from typeb_fock.verification.group import run_group_suite
from typeb_fock.verification.models import PropertyResult, SuiteReport
from typeb_fock.verification.operators import run_operators_suite
from typeb_fock.verification.orthopoly import run_orthopoly_suite
from typeb_fock.verification.partitions import run_partitions_suite

logger = logging.getLogger(__name__)

SuiteRunner = Callable[[RunConfig], List[PropertyResult]]

SUITES: Dict[VerifySuite, SuiteRunner] = {
    VerifySuite.GROUP: run_group_suite,
    VerifySuite.FOCK: run_fock_suite,
    VerifySuite.OPERATORS: run_operators_suite,
    VerifySuite.PARTITIONS: run_partitions_suite,
    VerifySuite.ORTHOPOLY: run_orthopoly_suite,
}


def run_suite(suite: VerifySuite, config: RunConfig) -> SuiteReport:
    """
    Run one suite, or all of them in a fixed order.

    A library error inside a suite is recorded as a failed property rather
    than propagated.
    """
    selected = list(SUITES) if suite is VerifySuite.ALL else [suite]
    report = SuiteReport(suite=suite, seed=config.seed, config=config.meta())
    for name in selected:
        started = time.perf_counter()
        try:
            report.results.extend(SUITES[name](config))
        except TypeBFockError as exc:
            logger.error(f"Suite {name.value} aborted: {exc}")
            report.results.append(
                PropertyResult(
                    name=f"{name.value}_suite",
                    suite=name,
                    residual=0.0,
                    bound=0.0,
                    passed=False,
                    detail=f"{type(exc).__name__}: {exc}",
                )
            )
        logger.debug(f"Suite {name.value} took {time.perf_counter() - started:.2f}s")
    logger.info(
        f"Verification {suite.value}: {len(report.failures)} of "
        f"{len(report.results)} properties failed"
    )
    return report
