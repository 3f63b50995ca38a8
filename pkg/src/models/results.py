"""
Result records shared by the numerical modules and the report writer.
"""
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, Optional, Tuple

import numpy as np


@dataclass(frozen=True)
class GridSupremum:
    """
    A supremum estimated on a sampling grid.

    It is a lower bound for the true supremum; ``argmax`` is the grid time
    where it was attained.
    """

    value: float
    grid_points: int
    argmax: float
    lower_bound: bool = True

    def __float__(self) -> float:
        return self.value


@dataclass(frozen=True)
class AdSeriesResult:
    """
    Partial sum of an ad-power series.

    Attributes:
        value: Sum in algebra coordinates
        terms: Number of terms added
        truncation_bound: Norm of the last term added
        exact: True when the series terminated (nilpotent case)
    """

    value: np.ndarray
    terms: int
    truncation_bound: float
    exact: bool = False

    def validate(self, rel_tol: float = 1e-15) -> bool:
        """Check the truncation invariant."""
        if self.exact:
            return True
        scale = max(1.0, float(np.linalg.norm(self.value)))
        return self.truncation_bound <= rel_tol * scale


@dataclass
class CheckResult:
    """
    One row of the checks report.

    Attributes:
        name: Check identifier, unique within an experiment
        group: Group name the check ran on
        residual: Measured residual or gap
        tolerance: Threshold the residual is compared against
        passed: residual <= tolerance (and finite)
        anchor: Reference string of the identity or bound being checked
        detail: Free-form context (scheme, seed, sampled flags ...)
    """

    name: str
    group: str
    residual: float
    tolerance: float
    passed: bool
    anchor: str = ""
    detail: str = ""

    @classmethod
    def compare(cls, name: str, group: str, residual: float, tolerance: float,
                anchor: str = "", detail: str = "") -> "CheckResult":
        """Build a row from a residual and its tolerance."""
        residual = float(residual)
        tolerance = float(tolerance)
        passed = bool(np.isfinite(residual) and residual <= tolerance)
        return cls(name, group, residual, tolerance, passed, anchor, detail)

    def validate(self) -> bool:
        if not self.name or not self.group:
            return False
        if not np.isfinite(self.tolerance) or self.tolerance < 0:
            return False
        return self.passed == bool(np.isfinite(self.residual) and self.residual <= self.tolerance)

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "CheckResult":
        return cls(
            name=str(data["name"]),
            group=str(data["group"]),
            residual=float(data["residual"]),
            tolerance=float(data["tolerance"]),
            passed=bool(data["passed"]),
            anchor=str(data.get("anchor", "")),
            detail=str(data.get("detail", "")),
        )

    def __repr__(self) -> str:
        mark = "pass" if self.passed else "FAIL"
        return f"CheckResult({self.name} on {self.group}: {self.residual:.3e} <= {self.tolerance:.1e} {mark})"


@dataclass
class ProbeReport:
    """
    Outcome of a sampled inequality probe.

    A report only ever says "no violation found"; sampling cannot certify
    a universally quantified inequality.

    Attributes:
        samples: Number of tuples/curves checked
        max_violation: Largest lhs - rhs seen (negative means slack everywhere)
        witness: Inputs of the worst case, replayable
        description: Seminorm or candidate description
        chart_exits: Samples whose product left the chart (not violations)
        violations: Samples with lhs - rhs above the tolerance
        tolerance: Slack tolerance used
    """

    samples: int = 0
    max_violation: float = -np.inf
    witness: Optional[Tuple[Any, ...]] = None
    description: str = ""
    chart_exits: int = 0
    violations: int = 0
    tolerance: float = 0.0
    extra: Dict[str, float] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def record(self, slack_violation: float, witness: Tuple[Any, ...]) -> None:
        """Account for one checked sample with violation lhs - rhs."""
        self.samples += 1
        if slack_violation > self.tolerance:
            self.violations += 1
        if slack_violation > self.max_violation:
            self.max_violation = float(slack_violation)
            self.witness = witness

    def merge(self, other: "ProbeReport") -> "ProbeReport":
        """Associative combination of two batch reports."""
        if other.max_violation > self.max_violation:
            worst, witness = other.max_violation, other.witness
        else:
            worst, witness = self.max_violation, self.witness
        extra = dict(self.extra)
        for key, value in other.extra.items():
            extra[key] = max(extra.get(key, -np.inf), value)
        return ProbeReport(
            samples=self.samples + other.samples,
            max_violation=worst,
            witness=witness,
            description=self.description or other.description,
            chart_exits=self.chart_exits + other.chart_exits,
            violations=self.violations + other.violations,
            tolerance=max(self.tolerance, other.tolerance),
            extra=extra,
        )

    def summary(self) -> str:
        verdict = "no violation found" if self.passed else f"{self.violations} violations"
        return (f"{self.description}: {verdict} in {self.samples} samples "
                f"(max lhs-rhs {self.max_violation:.3e}, chart exits {self.chart_exits})")


@dataclass(frozen=True)
class IdentityResidual:
    """
    Residual of a product-integral identity together with the combined
    Richardson error estimate of the evolutions it was computed from.
    """

    residual: float
    estimate: float

    def __float__(self) -> float:
        return self.residual

    def tolerance(self, factor: float, floor: float) -> float:
        return max(factor * self.estimate, floor)

    def within(self, factor: float, floor: float) -> bool:
        return bool(np.isfinite(self.residual) and self.residual <= self.tolerance(factor, floor))


def _relative(gap: float, reference: np.ndarray) -> float:
    scale = float(np.max(np.abs(reference))) if np.size(reference) else 0.0
    return gap / scale if scale > 0 else gap


@dataclass
class DerivativeComparison:
    """
    A numerically differentiated quantity next to its integral formula.

    Attributes:
        numeric: Finite-difference value (Richardson extrapolated)
        formula: Value of the closed formula
        gaps: Seminorm of numeric - formula per algebra seminorm name
        default: Name of the seminorm reported as ``gap``
        detail: Hypothesis samples, steps and similar context
    """

    numeric: np.ndarray
    formula: np.ndarray
    gaps: Dict[str, float]
    default: str
    detail: Dict[str, Any] = field(default_factory=dict)

    @property
    def gap(self) -> float:
        return self.gaps[self.default]

    @property
    def relative_gap(self) -> float:
        return _relative(self.gap, self.formula)

    def to_dict(self) -> dict:
        return {"numeric": np.asarray(self.numeric).tolist(), "formula": np.asarray(self.formula).tolist(),
                "gaps": dict(self.gaps), "default": self.default}


@dataclass
class DuhamelResult:
    """
    Both sides of the derivative-of-exp formula.

    ``gaps`` holds "integral" and "closed" (each right side against the
    finite-difference left side, relative) and "forms" (the two right sides
    against each other, absolute).
    """

    lhs: np.ndarray
    rhs_integral: np.ndarray
    rhs_closed: np.ndarray
    gaps: Dict[str, float]

    def __repr__(self) -> str:
        parts = ", ".join(f"{k}={v:.2e}" for k, v in self.gaps.items())
        return f"DuhamelResult({parts})"
