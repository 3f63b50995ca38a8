"""
Interface for algebra-valued curves.

A Curve is an evaluation procedure t -> X(t) in R^d on a compact interval
[r, r'] together with analytic derivatives up to a declared order.
"""
from abc import ABC, abstractmethod
from typing import Tuple, Union

import numpy as np

from ..exceptions import ContractViolation

# Order declared by smooth curves ("infinity" capped for loops over derivative orders).
SMOOTH = 64

TimeLike = Union[float, np.ndarray]


class Curve(ABC):
    """
    Abstract base class for curves [r, r'] -> R^d.

    Subclasses implement ``_evaluate`` on a 1-D array of times; the public
    ``evaluate`` handles scalars, shape bookkeeping and the order contract.
    """

    def __init__(self, start: float, end: float, dim: int, order: int):
        if not np.isfinite(start) or not np.isfinite(end) or not start < end:
            raise ContractViolation(f"curve interval must satisfy r < r', got [{start}, {end}]")
        if dim < 1:
            raise ContractViolation(f"curve dimension must be positive, got {dim}")
        if order < 0:
            raise ContractViolation(f"curve order must be nonnegative, got {order}")
        self.start = float(start)
        self.end = float(end)
        self.dim = int(dim)
        self.order = int(order)

    @property
    def interval(self) -> Tuple[float, float]:
        return self.start, self.end

    @property
    def length(self) -> float:
        return self.end - self.start

    @abstractmethod
    def _evaluate(self, t: np.ndarray, s: int) -> np.ndarray:
        """
        Evaluate the s-th derivative at the times t.

        Args:
            t: 1-D array of times inside the interval
            s: Derivative order, 0 <= s <= order

        Returns:
            np.ndarray: Array of shape (len(t), dim)
        """

    def evaluate(self, t: TimeLike, s: int = 0) -> np.ndarray:
        """
        Evaluate c^(s) at a time or an array of times.

        Returns:
            np.ndarray: shape (dim,) for scalar t, (n, dim) for array t
        """
        if s < 0 or s > self.order:
            raise ContractViolation(
                f"derivative order {s} exceeds declared order {self.order} of {type(self).__name__}")
        scalar = np.ndim(t) == 0
        times = np.atleast_1d(np.asarray(t, dtype=float))
        values = np.asarray(self._evaluate(times, s), dtype=float).reshape(times.size, self.dim)
        return values[0] if scalar else values

    def __call__(self, t: TimeLike) -> np.ndarray:
        return self.evaluate(t, 0)

    def grid(self, points: int) -> np.ndarray:
        """Uniform grid of the interval."""
        return np.linspace(self.start, self.end, points)

    def derivative_consistency_error(self, s: int = 0, points: int = 17, h: float = None) -> float:
        """
        Max deviation between 4th-order central differences of c^(s) and c^(s+1).

        Interior points only; h defaults to 1e-3 times the interval length.
        """
        if s + 1 > self.order:
            raise ContractViolation(f"order {self.order} too small to compare derivatives {s} and {s + 1}")
        h = h or 1e-3 * self.length
        ts = np.linspace(self.start + 3 * h, self.end - 3 * h, points)
        fd = (-self.evaluate(ts + 2 * h, s) + 8 * self.evaluate(ts + h, s)
              - 8 * self.evaluate(ts - h, s) + self.evaluate(ts - 2 * h, s)) / (12 * h)
        return float(np.max(np.abs(fd - self.evaluate(ts, s + 1))))

    # Combinators; implemented in combinators.py to keep this module dependency free.

    def restrict(self, a: float, b: float) -> "Curve":
        from .combinators import RestrictedCurve
        return RestrictedCurve(self, a, b)

    def reversed(self) -> "Curve":
        from .combinators import ReversedCurve
        return ReversedCurve(self)

    def scaled(self, factor: float) -> "Curve":
        from .combinators import LinearCombination
        return LinearCombination([self], [factor])

    def derivative(self, s: int = 1) -> "Curve":
        from .combinators import DerivativeCurve
        return DerivativeCurve(self, s)

    def __add__(self, other: "Curve") -> "Curve":
        from .combinators import LinearCombination
        return LinearCombination([self, other], [1.0, 1.0])

    def __sub__(self, other: "Curve") -> "Curve":
        from .combinators import LinearCombination
        return LinearCombination([self, other], [1.0, -1.0])

    def __neg__(self) -> "Curve":
        return self.scaled(-1.0)

    def __repr__(self) -> str:
        return (f"{type(self).__name__}(interval=[{self.start:g}, {self.end:g}], "
                f"dim={self.dim}, order={self.order})")
