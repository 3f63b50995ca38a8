"""
Random curves and reparametrizations for property checks.
"""
from typing import Optional, Tuple

import numpy as np

from ..curves import ConstantCurve, Curve, FourierCurve, PiecewiseCurve, PolynomialCurve
from ..exceptions import ContractViolation


def random_vector(rng: np.random.Generator, dim: int, scale: float = 1.0) -> np.ndarray:
    """Standard normal vector scaled to the given euclidean length."""
    x = rng.standard_normal(dim)
    return scale * x / max(np.linalg.norm(x), 1e-300)


def random_polynomial_curve(rng: np.random.Generator, dim: int, degree: int = 3, scale: float = 1.0,
                            interval: Tuple[float, float] = (0.0, 1.0)) -> PolynomialCurve:
    """Polynomial in (t - r) with normal coefficients damped by k!."""
    coeffs = rng.standard_normal((degree + 1, dim)) * scale
    coeffs /= np.array([np.prod(np.arange(1, k + 1)) for k in range(degree + 1)], dtype=float)[:, None]
    return PolynomialCurve(coeffs, interval[0], interval[1], origin=interval[0])


def random_fourier_curve(rng: np.random.Generator, dim: int, modes: int = 3, scale: float = 1.0,
                         interval: Tuple[float, float] = (0.0, 1.0)) -> FourierCurve:
    """Trigonometric curve with coefficients decaying like 1/k^2."""
    decay = 1.0 / np.arange(1, modes + 1) ** 2
    length = interval[1] - interval[0]
    return FourierCurve(
        mean=rng.standard_normal(dim) * scale,
        cos_coefficients=rng.standard_normal((modes, dim)) * decay[:, None] * scale,
        sin_coefficients=rng.standard_normal((modes, dim)) * decay[:, None] * scale,
        omega=2 * np.pi / length,
        start=interval[0], end=interval[1],
    )


def random_analytic_curve(rng: np.random.Generator, dim: int, scale: float = 1.0,
                          interval: Tuple[float, float] = (0.0, 1.0)) -> Curve:
    """Either a random polynomial or a random trigonometric curve."""
    if rng.random() < 0.5:
        return random_polynomial_curve(rng, dim, scale=scale, interval=interval)
    return random_fourier_curve(rng, dim, scale=scale, interval=interval)


def monotone_reparam(a: float, source: Tuple[float, float],
                     target: Tuple[float, float]) -> PolynomialCurve:
    """
    rho(t) = r + L (u + a u (1 - u)), u = (t - l) / (l' - l), |a| < 1.

    A smooth increasing bijection [l, l'] -> [r, r'].
    """
    if abs(a) >= 1:
        raise ContractViolation(f"|a| must be < 1 for monotonicity, got {a}")
    lo, hi = source
    r, r_end = target
    span, length = hi - lo, r_end - r
    coeffs = np.array([[r], [length * (1 + a) / span], [-length * a / span ** 2]])
    return PolynomialCurve(coeffs, lo, hi, origin=lo)


def random_monotone_reparam(rng: np.random.Generator, target: Tuple[float, float] = (0.0, 1.0),
                            source: Optional[Tuple[float, float]] = None) -> PolynomialCurve:
    """Random smooth increasing bijection onto target."""
    return monotone_reparam(float(rng.uniform(-0.9, 0.9)), source or target, target)


def random_piecewise_curve(rng: np.random.Generator, dim: int, segments: int = 3, scale: float = 1.0,
                           interval: Tuple[float, float] = (0.0, 1.0), constant: bool = True) -> PiecewiseCurve:
    """Piecewise-constant or piecewise-polynomial curve on random breakpoints."""
    inner = np.sort(rng.uniform(interval[0], interval[1], size=segments - 1))
    breakpoints = np.concatenate([[interval[0]], inner, [interval[1]]])
    pieces = []
    for a, b in zip(breakpoints[:-1], breakpoints[1:]):
        if constant:
            pieces.append(ConstantCurve(rng.standard_normal(dim) * scale, a, b))
        else:
            pieces.append(random_polynomial_curve(rng, dim, degree=2, scale=scale, interval=(a, b)))
    return PiecewiseCurve(breakpoints, pieces)
