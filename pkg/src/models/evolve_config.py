"""
Step configuration of product-integral evolutions.
"""
from dataclasses import asdict, dataclass
from math import ceil
from typing import Optional

from ..exceptions import ContractViolation, StepLimitError

SCHEMES = ("lie_euler", "midpoint")


@dataclass(frozen=True)
class EvolveConfig:
    """
    Attributes:
        scheme: "lie_euler" (order 1) or "midpoint" (order 2)
        step: Step size h; the step count is ceil(L / h)
        tolerance: Optional target for the Richardson estimate; the step is
            halved from L/16 until the estimate meets it
        max_steps: Upper bound on the steps of a single run
        estimate: Whether to run the h/2 companion for an error estimate
    """

    scheme: str = "midpoint"
    step: Optional[float] = 2.0 ** -7
    tolerance: Optional[float] = None
    max_steps: int = 1 << 20
    estimate: bool = True

    def validate(self) -> bool:
        if self.scheme not in SCHEMES:
            return False
        if self.step is None and self.tolerance is None:
            return False
        if self.step is not None and not self.step > 0:
            return False
        if self.tolerance is not None and not self.tolerance > 0:
            return False
        return self.max_steps >= 1

    def steps_for(self, length: float, step: Optional[float] = None) -> int:
        """Number of uniform steps covering an interval of the given length."""
        h = step if step is not None else self.step
        if h is None or not h > 0 or not length > 0:
            raise ContractViolation(f"cannot derive a step count from h={h}, L={length}")
        n = max(1, ceil(length / h - 1e-9))
        if n > self.max_steps:
            raise StepLimitError(f"{n} steps needed for L={length:g}, h={h:g}; max_steps={self.max_steps}")
        return n

    def with_step(self, step: float) -> "EvolveConfig":
        return EvolveConfig(self.scheme, step, None, self.max_steps, self.estimate)

    def with_scheme(self, scheme: str) -> "EvolveConfig":
        return EvolveConfig(scheme, self.step, self.tolerance, self.max_steps, self.estimate)

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "EvolveConfig":
        cfg = cls(**{k: data[k] for k in ("scheme", "step", "tolerance", "max_steps", "estimate") if k in data})
        if not cfg.validate():
            raise ContractViolation(f"invalid evolve config: {data}")
        return cfg
