"""
JSON experiment configuration.

A config names an experiment kind, the groups it runs on, optional explicit
curves (random analytic curves are drawn otherwise), the evolution scheme,
the seed and the output directory::

    {
      "schema_version": "1",
      "kind": "identities",
      "groups": [{"name": "so3"}, {"name": "abelian", "n": 2}],
      "samples": 5,
      "seed": 7,
      "scheme": {"name": "midpoint", "step": 0.0078125},
      "output": {"directory": "reports/identities"}
    }
"""
import json
from pathlib import Path
from typing import Annotated, Any, Dict, List, Literal, Optional, Tuple, Union

import numpy as np
from pydantic import AfterValidator, BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from ..curves import ConstantCurve, Curve, FourierCurve, PiecewiseCurve, PolynomialCurve
from ..exceptions import ConfigError
from ..groups import GroupSpec, make_group
from ..models.evolve_config import SCHEMES, EvolveConfig

SCHEMA_VERSION = "1"

EXPERIMENT_KINDS = ("identities", "evolve", "duhamel", "param-derivative", "approx", "muconvex", "mackey",
                    "groenwall")


class _Strict(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)


def _check_interval(value: Tuple[float, float]) -> Tuple[float, float]:
    if not value[0] < value[1]:
        raise ValueError(f"interval must satisfy r < r', got {list(value)}")
    return value


Interval = Annotated[Tuple[float, float], AfterValidator(_check_interval)]


class ConstantCurveConfig(_Strict):
    kind: Literal["constant"] = "constant"
    value: List[float] = Field(min_length=1)
    interval: Interval = (0.0, 1.0)

    @property
    def dim(self) -> int:
        return len(self.value)

    def to_curve(self, interval: Optional[Interval] = None) -> Curve:
        return ConstantCurve(self.value, *(interval or self.interval))


class PolynomialCurveConfig(_Strict):
    """Row k of ``coefficients`` multiplies (t - origin)^k; origin defaults to r."""

    kind: Literal["polynomial"] = "polynomial"
    coefficients: List[List[float]] = Field(min_length=1)
    interval: Interval = (0.0, 1.0)
    origin: Optional[float] = None

    @field_validator("coefficients")
    @classmethod
    def _rectangular(cls, value):
        if len({len(row) for row in value}) != 1 or not value[0]:
            raise ValueError("coefficient rows must be non-empty and of equal length")
        return value

    @property
    def dim(self) -> int:
        return len(self.coefficients[0])

    def to_curve(self, interval: Optional[Interval] = None) -> Curve:
        start, end = interval or self.interval
        origin = start if self.origin is None else self.origin
        return PolynomialCurve(np.array(self.coefficients), start, end, origin)


class FourierCurveConfig(_Strict):
    """mean + sum_k cos_k cos(k omega t) + sin_k sin(k omega t); omega defaults to 2 pi / L."""

    kind: Literal["fourier"] = "fourier"
    mean: List[float] = Field(min_length=1)
    cos: List[List[float]] = Field(default_factory=list)
    sin: List[List[float]] = Field(default_factory=list)
    omega: Optional[float] = None
    interval: Interval = (0.0, 1.0)

    @model_validator(mode="after")
    def _shapes(self):
        d = len(self.mean)
        if any(len(row) != d for row in self.cos + self.sin):
            raise ValueError(f"fourier coefficient rows must have length {d}")
        if self.cos and self.sin and len(self.cos) != len(self.sin):
            raise ValueError("cos and sin need the same number of modes")
        return self

    @property
    def dim(self) -> int:
        return len(self.mean)

    def to_curve(self, interval: Optional[Interval] = None) -> Curve:
        start, end = interval or self.interval
        modes = max(len(self.cos), len(self.sin), 1)
        zeros = np.zeros((modes, self.dim))
        cos = np.array(self.cos) if self.cos else zeros
        sin = np.array(self.sin) if self.sin else zeros
        omega = self.omega if self.omega is not None else 2 * np.pi / (end - start)
        return FourierCurve(np.array(self.mean), cos, sin, omega, start, end)


SegmentConfig = Annotated[Union[ConstantCurveConfig, PolynomialCurveConfig, FourierCurveConfig],
                          Field(discriminator="kind")]


class PiecewiseCurveConfig(_Strict):
    """Segment p lives on [breakpoints[p], breakpoints[p+1]]; segment intervals are ignored."""

    kind: Literal["piecewise"] = "piecewise"
    breakpoints: List[float] = Field(min_length=2)
    segments: List[SegmentConfig] = Field(min_length=1)

    @model_validator(mode="after")
    def _tiling(self):
        if any(b <= a for a, b in zip(self.breakpoints[:-1], self.breakpoints[1:])):
            raise ValueError("breakpoints must increase strictly")
        if len(self.segments) != len(self.breakpoints) - 1:
            raise ValueError(f"{len(self.breakpoints)} breakpoints need {len(self.breakpoints) - 1} segments")
        if len({seg.dim for seg in self.segments}) != 1:
            raise ValueError("segments disagree on dimension")
        return self

    @property
    def dim(self) -> int:
        return self.segments[0].dim

    def to_curve(self, interval: Optional[Interval] = None) -> Curve:
        b = self.breakpoints
        return PiecewiseCurve(b, [seg.to_curve((b[p], b[p + 1])) for p, seg in enumerate(self.segments)])


CurveDescriptor = Annotated[
    Union[ConstantCurveConfig, PolynomialCurveConfig, FourierCurveConfig, PiecewiseCurveConfig],
    Field(discriminator="kind")]


class GroupConfig(_Strict):
    name: str
    n: Optional[int] = Field(default=None, ge=1)

    def to_group(self) -> GroupSpec:
        return make_group(self.name, self.n)


class SchemeConfig(_Strict):
    """Evolution scheme plus the step ladder used by convergence experiments."""

    name: str = "midpoint"
    step: Optional[float] = Field(default=2.0 ** -7, gt=0)
    tolerance: Optional[float] = Field(default=None, gt=0)
    ladder: List[float] = Field(default_factory=lambda: [2.0 ** -k for k in range(4, 11)])
    oracle_step: float = Field(default=2.0 ** -14, gt=0)

    @field_validator("name")
    @classmethod
    def _known(cls, value):
        if value not in SCHEMES:
            raise ValueError(f"unknown scheme {value!r}; available: {', '.join(SCHEMES)}")
        return value

    @model_validator(mode="after")
    def _step_or_tolerance(self):
        if self.step is None and self.tolerance is None:
            raise ValueError("either step or tolerance is required")
        return self

    def to_evolve_config(self) -> EvolveConfig:
        return EvolveConfig(self.name, self.step, self.tolerance)


class OutputConfig(_Strict):
    directory: str = "reports"
    convergence: bool = True


class ExperimentConfig(_Strict):
    """
    One experiment run.

    ``tolerances`` overrides the default threshold of individual check
    families (keyed by the check family name, e.g. "der.product");
    ``options`` carries kind-specific parameters such as ``n_max``.
    """

    schema_version: Literal["1"] = SCHEMA_VERSION
    kind: Literal["identities", "evolve", "duhamel", "param-derivative", "approx", "muconvex", "mackey",
                  "groenwall"]
    groups: List[GroupConfig] = Field(min_length=1)
    curves: List[CurveDescriptor] = Field(default_factory=list)
    scheme: SchemeConfig = Field(default_factory=SchemeConfig)
    seed: int = Field(default=0, ge=0)
    samples: int = Field(default=5, ge=1)
    scale: float = Field(default=0.5, gt=0)
    tolerances: Dict[str, float] = Field(default_factory=dict)
    options: Dict[str, Any] = Field(default_factory=dict)
    output: OutputConfig = Field(default_factory=OutputConfig)

    @model_validator(mode="after")
    def _constructible(self):
        for group_config in self.groups:
            group = group_config.to_group()
            for k, curve in enumerate(self.curves):
                if curve.dim != group.dim:
                    raise ValueError(f"curve {k} has dimension {curve.dim}, {group.name} needs {group.dim}")
        return self

    def tolerance(self, check: str, default: float) -> float:
        return float(self.tolerances.get(check, default))

    def option(self, key: str, default: Any) -> Any:
        return self.options.get(key, default)

    def with_seed(self, seed: int) -> "ExperimentConfig":
        return self.model_copy(update={"seed": seed})

    def with_output(self, directory: str) -> "ExperimentConfig":
        return self.model_copy(update={"output": OutputConfig(directory=directory,
                                                              convergence=self.output.convergence)})


def _diagnostics(error: ValidationError) -> List[str]:
    return [f"{'.'.join(str(part) for part in item['loc']) or '<root>'}: {item['msg']}"
            for item in error.errors()]


def parse_experiment_config(data: Dict[str, Any]) -> ExperimentConfig:
    """
    Validate a decoded config.

    Raises:
        ConfigError: With one "field.path: message" diagnostic per problem
    """
    try:
        return ExperimentConfig.model_validate(data)
    except ValidationError as exc:
        diagnostics = _diagnostics(exc)
        raise ConfigError(f"invalid experiment config: {diagnostics[0]}", diagnostics) from exc


def load_experiment_config(path: Union[str, Path]) -> ExperimentConfig:
    """
    Read and validate a JSON config file.

    Raises:
        ConfigError: If the file is unreadable, not JSON (with line and
            column) or fails schema validation
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}", [str(exc)]) from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        where = f"line {exc.lineno}, column {exc.colno}: {exc.msg}"
        raise ConfigError(f"{path} is not valid JSON ({where})", [where]) from exc
    if not isinstance(data, dict):
        raise ConfigError(f"{path}: top level must be an object", ["<root>: expected an object"])
    return parse_experiment_config(data)
