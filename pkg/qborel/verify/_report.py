"""The machine-readable results of a verification run."""

from __future__ import annotations
from typing import Any
import json
import math
import pathlib
import dataclasses
from qborel import mixins

__all__ = [
    "SCHEMA_VERSION",
    "CheckResult",
    "SuiteReport",
    "VerificationReport",
]

SCHEMA_VERSION = 1
"""Version of the layout written by :meth:`VerificationReport.to_dict`."""


def _number(value: None | float) -> None | float | str:
    if value is None:
        return None
    value = float(value)
    if not math.isfinite(value):
        return str(value)
    return value


@dataclasses.dataclass(eq=False, repr=False)
class CheckResult(
    mixins.Printable,
):
    """The outcome of one identity, evaluated once."""

    description: str
    """What was compared."""

    residual: None | float
    """The residual, or :obj:`None` if the check raised."""

    tolerance: float
    """The largest residual that passes."""

    exact: bool = False
    """Whether the residual counts failing exact comparisons."""

    values: dict[str, Any] = dataclasses.field(default_factory=dict)
    """Additional computed values worth reporting, such as :math:`\\psi(1)`."""

    error: None | str = None
    """The message of the exception raised by the check, if any."""

    wall_time: float = 0.0

    anchor: None | str = None
    """The statement verified by the suite the check belongs to."""

    def __post_init__(self):
        if self.residual is not None and not self.residual >= 0:
            raise ValueError(f"residuals are nonnegative, got {self.residual} for {self.description!r}")

    @property
    def passed(self) -> bool:
        return self.error is None and self.residual is not None and self.residual <= self.tolerance

    def to_dict(self) -> dict[str, Any]:
        return dict(
            description=self.description,
            anchor=self.anchor,
            exact=self.exact,
            residual=_number(self.residual),
            tolerance=self.tolerance,
            passed=self.passed,
            values={k: _number(v) if isinstance(v, float) else v for k, v in self.values.items()},
            error=self.error,
            wall_time=self.wall_time,
        )


@dataclasses.dataclass(eq=False, repr=False)
class SuiteReport(
    mixins.Printable,
):
    """The checks of one suite."""

    name: str
    anchor: str
    """The statement the suite verifies."""

    checks: list[CheckResult] = dataclasses.field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def residual(self) -> float:
        """The largest residual, infinite if a check raised."""
        return max((math.inf if c.residual is None else c.residual for c in self.checks), default=0.0)

    def to_dict(self) -> dict[str, Any]:
        return dict(
            name=self.name,
            anchor=self.anchor,
            passed=self.passed,
            wall_time=self.wall_time,
            checks=[check.to_dict() for check in self.checks],
        )


@dataclasses.dataclass(eq=False, repr=False)
class VerificationReport(
    mixins.Printable,
):
    """
    Everything a run computed. Apart from the wall times the report is a
    function of :attr:`parameters`, which include the seed.
    """

    parameters: dict[str, Any]
    suites: list[SuiteReport] = dataclasses.field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return all(suite.passed for suite in self.suites)

    def to_dict(self) -> dict[str, Any]:
        return dict(
            schema_version=SCHEMA_VERSION,
            passed=self.passed,
            seed=self.parameters.get("seed"),
            parameters=self.parameters,
            wall_time=self.wall_time,
            suites=[suite.to_dict() for suite in self.suites],
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, allow_nan=False)

    def write(self, path: pathlib.Path) -> pathlib.Path:
        path = pathlib.Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.to_json() + "\n", encoding="utf-8")
        return path
