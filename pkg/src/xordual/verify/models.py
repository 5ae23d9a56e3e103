"""Verification report models."""

from pydantic import BaseModel, ConfigDict, computed_field


class CheckResult(BaseModel):
    """Outcome of one oracle comparison.

    ``within_tolerance`` records the comparison itself. A negative control sets
    ``expect_failure`` and passes exactly when the comparison fails.
    """

    model_config = ConfigDict(frozen=True)

    name: str
    instance: str
    max_residual: float
    tolerance: float
    within_tolerance: bool
    runtime: float
    expect_failure: bool = False
    detail: str = ""

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        return self.within_tolerance != self.expect_failure


class VerificationReport(BaseModel):
    """All checks of one suite run; passes iff every check passes."""

    model_config = ConfigDict(frozen=True)

    suite: str
    seed: int
    checks: tuple[CheckResult, ...] = ()

    @computed_field  # type: ignore[prop-decorator]
    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def failures(self) -> list[CheckResult]:
        return [check for check in self.checks if not check.passed]
