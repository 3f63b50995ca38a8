"""
Parameter-dependent integrands (x, t) -> Phi(x, t).
"""
from typing import Callable, Dict, Optional, Sequence

import numpy as np

from ..curves import SMOOTH, Curve, FunctionCurve
from ..exceptions import ContractViolation
from ..lcvs.sampling import random_polynomial_curve

FamilyFn = Callable[[float, np.ndarray, int], np.ndarray]
PartialFn = Callable[[float, np.ndarray], np.ndarray]


class ParamFamily:
    """
    A family of curves Phi(x, .) on [r, r'] for x in an open interval.

    Attributes:
        fn: Vectorized (x, t_array, s) -> (n, d) giving d^s/dt^s Phi(x, t)
        dim: Algebra dimension
        partial: Optional (x, t_array) -> (n, d) giving the x-derivative
        lipschitz: Optional declared bounds L_{p,0} keyed by seminorm name for
            (1/|h|) sup_t p(Phi(x+h, t) - Phi(x, t))
        domain: Open parameter interval
    """

    def __init__(self, fn: FamilyFn, dim: int, start: float = 0.0, end: float = 1.0,
                 partial: Optional[PartialFn] = None, lipschitz: Optional[Dict[str, float]] = None,
                 domain=(-np.inf, np.inf), order: int = SMOOTH, name: str = "family"):
        if not start < end:
            raise ContractViolation(f"family interval must satisfy r < r', got [{start}, {end}]")
        self.fn = fn
        self.dim = dim
        self.start = float(start)
        self.end = float(end)
        self.partial = partial
        self.lipschitz = dict(lipschitz or {})
        self.domain = tuple(domain)
        self.order = order
        self.name = name

    def check_parameter(self, x: float) -> None:
        if not self.domain[0] < x < self.domain[1]:
            raise ContractViolation(f"parameter {x} outside the open interval {self.domain}")

    def curve(self, x: float) -> Curve:
        """Phi(x, .)."""
        self.check_parameter(x)
        return FunctionCurve(lambda t, s: self.fn(x, t, s), self.dim, self.start, self.end,
                             order=self.order, name=f"{self.name}({x:g})")

    def partial_curve(self, x: float, h: float = 1e-4) -> Curve:
        """d/dx Phi(x, .); a 4th-order central difference in x when none is declared."""
        self.check_parameter(x)
        if self.partial is not None:
            return FunctionCurve(lambda t, s: self.partial(x, t), self.dim, self.start, self.end,
                                 name=f"d{self.name}({x:g})")

        def fd(t: np.ndarray, s: int) -> np.ndarray:
            return (-self.fn(x + 2 * h, t, 0) + 8 * self.fn(x + h, t, 0)
                    - 8 * self.fn(x - h, t, 0) + self.fn(x - 2 * h, t, 0)) / (12 * h)
        return FunctionCurve(fd, self.dim, self.start, self.end, name=f"d{self.name}({x:g})")

    def partial_error(self, x: float, h: float = 1e-3, points: int = 33) -> float:
        """Max deviation of the declared partial from the central difference in x."""
        if self.partial is None:
            raise ContractViolation(f"{self.name} declares no x-derivative")
        t = np.linspace(self.start, self.end, points)
        fd = (self.fn(x + h, t, 0) - self.fn(x - h, t, 0)) / (2 * h)
        return float(np.max(np.abs(fd - self.partial(x, t))))

    def __repr__(self) -> str:
        return f"ParamFamily({self.name}, dim={self.dim}, interval=[{self.start:g}, {self.end:g}])"


def linear_family(direction, start: float = 0.0, end: float = 1.0) -> ParamFamily:
    """Phi(x, t) = x X, constant in t."""
    direction = np.asarray(direction, dtype=float)

    def fn(x, t, s):
        return np.tile(x * direction if s == 0 else np.zeros_like(direction), (t.size, 1))
    return ParamFamily(fn, direction.size, start, end, partial=lambda x, t: np.tile(direction, (t.size, 1)),
                       name="linear")


def affine_family(base: Curve, direction: Curve) -> ParamFamily:
    """Phi(x, .) = phi + x psi; its x-derivative is psi."""
    if base.interval != direction.interval or base.dim != direction.dim:
        raise ContractViolation("base and direction curves must share interval and dimension")
    return ParamFamily(lambda x, t, s: base.evaluate(t, s) + x * direction.evaluate(t, s), base.dim,
                       base.start, base.end, partial=lambda x, t: direction.evaluate(t, 0),
                       order=min(base.order, direction.order), name="affine")


def quadratic_family(a: Curve, b: Curve, c: Curve) -> ParamFamily:
    """Phi(x, .) = a + x b + x^2 c."""
    order = min(a.order, b.order, c.order)
    return ParamFamily(lambda x, t, s: a.evaluate(t, s) + x * b.evaluate(t, s) + x * x * c.evaluate(t, s),
                       a.dim, a.start, a.end,
                       partial=lambda x, t: b.evaluate(t, 0) + 2 * x * c.evaluate(t, 0),
                       order=order, name="quadratic")


def random_family(rng: np.random.Generator, dim: int, scale: float = 0.5,
                  interval: Sequence[float] = (0.0, 1.0)) -> ParamFamily:
    """Quadratic family with random polynomial coefficient curves."""
    curves = [random_polynomial_curve(rng, dim, scale=scale, interval=tuple(interval)) for _ in range(3)]
    return quadratic_family(*curves)


def sine_family() -> ParamFamily:
    """Phi(x, t) = (x + sin t) e_1 + x^2 t e_2 in three coordinates."""

    def fn(x, t, s):
        out = np.zeros((t.size, 3))
        out[:, 0] = (x if s == 0 else 0.0) + np.sin(t + s * np.pi / 2)
        out[:, 1] = x * x * (t if s == 0 else (1.0 if s == 1 else 0.0))
        return out

    def partial(x, t):
        out = np.zeros((t.size, 3))
        out[:, 0] = 1.0
        out[:, 1] = 2 * x * t
        return out
    return ParamFamily(fn, 3, 0.0, 1.0, partial=partial, name="sine")
