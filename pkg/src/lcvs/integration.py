"""
Riemann integration of curves by composite Simpson with interval halving.
"""
import logging
from typing import Callable, Optional

import numpy as np
from scipy.integrate import cumulative_simpson, simpson

from ..config.settings import get_settings
from ..curves import Curve, PiecewiseCurve
from ..exceptions import ContractViolation, IntegrationError

logger = logging.getLogger(__name__)

VectorFn = Callable[[np.ndarray], np.ndarray]

INITIAL_INTERVALS = 16


def _checked(fn: VectorFn, t: np.ndarray) -> np.ndarray:
    values = np.asarray(fn(t), dtype=float).reshape(t.size, -1)
    bad = ~np.all(np.isfinite(values), axis=1)
    if np.any(bad):
        raise IntegrationError("non-finite integrand value", t=float(t[np.argmax(bad)]))
    return values


def integrate_callable(fn: VectorFn, a: float, b: float, tol: Optional[float] = None,
                       max_level: Optional[int] = None) -> np.ndarray:
    """
    Integrate a vectorized function t_array -> (n, d) over [a, b].

    Halves the Simpson step, reusing previous nodes, until two successive
    values differ by at most tol * max(1, |value|) in the max norm.

    Raises:
        IntegrationError: If the integrand is not finite somewhere on the grid
    """
    settings = get_settings()
    tol = settings.quadrature_tol if tol is None else tol
    max_level = settings.quadrature_max_level if max_level is None else max_level
    if a == b:
        return np.zeros(_checked(fn, np.array([a])).shape[1])
    if a > b:
        return -integrate_callable(fn, b, a, tol, max_level)

    n = INITIAL_INTERVALS
    t = np.linspace(a, b, n + 1)
    values = _checked(fn, t)
    current = simpson(values, dx=(b - a) / n, axis=0)
    for level in range(1, max_level + 1):
        mids = 0.5 * (t[:-1] + t[1:])
        mid_values = _checked(fn, mids)
        n *= 2
        t = np.linspace(a, b, n + 1)
        merged = np.empty((n + 1, values.shape[1]))
        merged[0::2] = values
        merged[1::2] = mid_values
        values = merged
        refined = simpson(values, dx=(b - a) / n, axis=0)
        change = float(np.max(np.abs(refined - current)))
        current = refined
        if change <= tol * max(1.0, float(np.max(np.abs(refined)))):
            logger.debug("Simpson converged on [%g, %g] after %d halvings", a, b, level)
            return current
    logger.warning("Simpson did not reach tol=%.1e on [%g, %g] within %d halvings (last change %.3e)",
                   tol, a, b, max_level, change)
    return current


def riemann_integral(c: Curve, a: Optional[float] = None, b: Optional[float] = None,
                     weight: Optional[Callable[[np.ndarray], np.ndarray]] = None,
                     tol: Optional[float] = None) -> np.ndarray:
    """
    Riemann integral of c (optionally times a scalar weight) over [a, b].

    Piecewise curves are integrated segment by segment, so jumps at
    breakpoints do not slow the convergence.

    Args:
        c: Curve to integrate
        a, b: Bounds, default to the interval of c; a > b flips the sign
        weight: Optional vectorized scalar function multiplying c
        tol: Relative halving threshold (default from settings)

    Returns:
        np.ndarray: Integral in R^d
    """
    a = c.start if a is None else float(a)
    b = c.end if b is None else float(b)
    if a == b:
        return np.zeros(c.dim)
    if a > b:
        return -riemann_integral(c, b, a, weight, tol)
    slack = 1e-12 * max(1.0, abs(c.start), abs(c.end))
    if a < c.start - slack or b > c.end + slack:
        raise ContractViolation(f"[{a}, {b}] is not inside the curve interval [{c.start}, {c.end}]")

    def integrand(curve: Curve) -> VectorFn:
        if weight is None:
            return lambda t: curve.evaluate(np.clip(t, curve.start, curve.end))
        return lambda t: np.asarray(weight(t))[:, None] * curve.evaluate(np.clip(t, curve.start, curve.end))

    if isinstance(c, PiecewiseCurve):
        cuts = [a] + [t for t in c.breakpoints if a < t < b] + [b]
        total = np.zeros(c.dim)
        for left, right in zip(cuts[:-1], cuts[1:]):
            seg = c.segments[int(c.segment_index(np.array([left]))[0])]
            total += integrate_callable(integrand(seg), left, right, tol)
        return total
    return integrate_callable(integrand(c), a, b, tol)


def piecewise_integral(pw: PiecewiseCurve, tol: Optional[float] = None) -> np.ndarray:
    """Sum of the segment integrals of a piecewise curve."""
    return sum(riemann_integral(seg, tol=tol) for seg in pw.segments)


def integrate_samples(values: np.ndarray, t: np.ndarray) -> np.ndarray:
    """Simpson integral of values sampled on the grid t (axis 0)."""
    return simpson(np.asarray(values, dtype=float), x=t, axis=0)


def cumulative_integral(values: np.ndarray, t: np.ndarray) -> np.ndarray:
    """Running Simpson integrals int_{t_0}^{t_k} for every grid node, starting at 0."""
    return cumulative_simpson(np.asarray(values, dtype=float), x=t, axis=0, initial=0.0)
