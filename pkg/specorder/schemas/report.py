"""
Specorder - Verification Report Schema
Machine-readable result of a verification suite
"""

from typing import Any

from pydantic import Field

from specorder.schemas.common import BaseSchema


class SuiteResult(BaseSchema):
    """Outcome of one suite on one system."""

    suite: str
    passed: bool = True
    checked: dict[str, int] = Field(default_factory=dict)
    counterexamples: list[dict[str, Any]] = Field(default_factory=list)

    def count(self, check: str, amount: int = 1) -> None:
        self.checked[check] = self.checked.get(check, 0) + amount

    def fail(self, check: str, **data: Any) -> None:
        self.passed = False
        self.counterexamples.append({"check": check, **data})


class VerificationReport(BaseSchema):
    suite: str
    family: str
    rank: int
    passed: bool
    checked: dict[str, int] = Field(default_factory=dict)
    counterexamples: list[dict[str, Any]] = Field(default_factory=list)

    @classmethod
    def merge(cls, suite: str, family: str, rank: int, results: list[SuiteResult]) -> "VerificationReport":
        checked: dict[str, int] = {}
        counterexamples: list[dict[str, Any]] = []
        for result in results:
            prefix = f"{result.suite}." if len(results) > 1 else ""
            for name, value in result.checked.items():
                checked[prefix + name] = value
            counterexamples.extend({"suite": result.suite, **c} for c in result.counterexamples)
        return cls(
            suite=suite,
            family=family,
            rank=rank,
            passed=all(r.passed for r in results),
            checked=checked,
            counterexamples=counterexamples,
        )
