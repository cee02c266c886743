"""
Result models for the verification suites.
"""

from __future__ import annotations

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

from typeb_fock.types import VerifySuite


class PropertyResult(BaseModel):
    """
    Outcome of one checked property.

    residual is the measured deviation between two routes (or the measured
    quantity itself for one-sided checks); bound is the tolerance it is held to.
    """

    name: str
    suite: VerifySuite
    residual: float
    bound: float
    passed: bool
    detail: str = ""
    skipped: bool = False

    model_config = ConfigDict(extra="forbid")

    @classmethod
    def within(
        cls, suite: VerifySuite, name: str, residual: float, bound: float, detail: str = ""
    ) -> PropertyResult:
        """Passes iff residual <= bound."""
        residual = float(residual)
        return cls(
            name=name,
            suite=suite,
            residual=residual,
            bound=float(bound),
            passed=residual <= bound,
            detail=detail,
        )

    @classmethod
    def skip(cls, suite: VerifySuite, name: str, reason: str) -> PropertyResult:
        return cls(
            name=name,
            suite=suite,
            residual=0.0,
            bound=0.0,
            passed=True,
            detail=reason,
            skipped=True,
        )

    def to_row(self) -> Dict[str, Any]:
        return self.model_dump(mode="json")


class SuiteReport(BaseModel):
    """Results of one or more suites run under a single configuration."""

    suite: VerifySuite
    seed: int
    config: Dict[str, Any] = Field(default_factory=dict)
    results: List[PropertyResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> List[PropertyResult]:
        return [r for r in self.results if not r.passed]

    def success_rate(self) -> float:
        checked = [r for r in self.results if not r.skipped]
        if not checked:
            return 1.0
        return sum(1 for r in checked if r.passed) / len(checked)

    def by_suite(self, suite: VerifySuite) -> List[PropertyResult]:
        return [r for r in self.results if r.suite is suite]

    def find(self, name: str) -> Optional[PropertyResult]:
        return next((r for r in self.results if r.name == name), None)

    def to_rows(self) -> List[Dict[str, Any]]:
        return [r.to_row() for r in self.results]

    def summary(self) -> Dict[str, Any]:
        return {
            "suite": self.suite.value,
            "seed": self.seed,
            "properties": len(self.results),
            "failed": len(self.failures),
            "skipped": sum(1 for r in self.results if r.skipped),
            "passed": self.passed,
        }
