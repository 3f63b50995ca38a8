"""
Curves with closed-form values and derivatives of all orders.
"""
from typing import Callable, Optional

import numpy as np
from numpy.polynomial import polynomial as P

from ..exceptions import ContractViolation
from .interface import SMOOTH, Curve


class ConstantCurve(Curve):
    """t -> X on [r, r']."""

    def __init__(self, value, start: float = 0.0, end: float = 1.0):
        value = np.atleast_1d(np.asarray(value, dtype=float))
        super().__init__(start, end, value.size, SMOOTH)
        self.value = value

    def _evaluate(self, t: np.ndarray, s: int) -> np.ndarray:
        if s == 0:
            return np.broadcast_to(self.value, (t.size, self.dim)).copy()
        return np.zeros((t.size, self.dim))


def zero_curve(dim: int, start: float = 0.0, end: float = 1.0) -> ConstantCurve:
    """The zero curve in R^dim."""
    return ConstantCurve(np.zeros(dim), start, end)


class PolynomialCurve(Curve):
    """
    t -> sum_k c_k (t - origin)^k.

    Attributes:
        coefficients: (degree+1, d) array, row k multiplies (t - origin)^k
        origin: Expansion point (defaults to 0)
    """

    def __init__(self, coefficients, start: float = 0.0, end: float = 1.0, origin: float = 0.0):
        coefficients = np.asarray(coefficients, dtype=float)
        if coefficients.ndim == 1:
            coefficients = coefficients[:, None]
        if coefficients.ndim != 2 or coefficients.shape[0] < 1:
            raise ContractViolation(f"polynomial coefficients must be (degree+1, d), got {coefficients.shape}")
        super().__init__(start, end, coefficients.shape[1], SMOOTH)
        self.coefficients = coefficients
        self.origin = float(origin)

    @property
    def degree(self) -> int:
        return self.coefficients.shape[0] - 1

    def _evaluate(self, t: np.ndarray, s: int) -> np.ndarray:
        if s > self.degree:
            return np.zeros((t.size, self.dim))
        coeffs = P.polyder(self.coefficients, m=s, axis=0) if s else self.coefficients
        return P.polyval(t - self.origin, coeffs).T


class FourierCurve(Curve):
    """
    t -> a_0 + sum_k a_k cos(k w t) + b_k sin(k w t).

    Attributes:
        mean: (d,) constant term
        cos_coefficients: (K, d) array
        sin_coefficients: (K, d) array
        omega: Base angular frequency w
    """

    def __init__(self, mean, cos_coefficients, sin_coefficients, omega: float = 2 * np.pi,
                 start: float = 0.0, end: float = 1.0):
        mean = np.atleast_1d(np.asarray(mean, dtype=float))
        cos_coefficients = np.asarray(cos_coefficients, dtype=float).reshape(-1, mean.size)
        sin_coefficients = np.asarray(sin_coefficients, dtype=float).reshape(-1, mean.size)
        if cos_coefficients.shape != sin_coefficients.shape:
            raise ContractViolation("cosine and sine coefficient arrays must have equal shapes")
        super().__init__(start, end, mean.size, SMOOTH)
        self.mean = mean
        self.cos_coefficients = cos_coefficients
        self.sin_coefficients = sin_coefficients
        self.omega = float(omega)

    def _evaluate(self, t: np.ndarray, s: int) -> np.ndarray:
        k = np.arange(1, self.cos_coefficients.shape[0] + 1) * self.omega
        phase = np.outer(t, k) + s * np.pi / 2
        scale = k ** s
        values = (np.cos(phase) * scale) @ self.cos_coefficients + (np.sin(phase) * scale) @ self.sin_coefficients
        if s == 0:
            values = values + self.mean
        return values


class FunctionCurve(Curve):
    """
    Curve given by a vectorized callable (t_array, s) -> (n, d).

    Used for curves assembled on the fly, e.g. Ad-transported integrands.
    """

    def __init__(self, fn: Callable[[np.ndarray, int], np.ndarray], dim: int,
                 start: float = 0.0, end: float = 1.0, order: int = 0,
                 name: Optional[str] = None):
        super().__init__(start, end, dim, order)
        self.fn = fn
        self.name = name or "function"

    def _evaluate(self, t: np.ndarray, s: int) -> np.ndarray:
        return self.fn(t, s)
