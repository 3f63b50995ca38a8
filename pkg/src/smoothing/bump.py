"""
The bump profile, glued reparametrizations and smoothing of piecewise curves.
"""
import logging
from functools import lru_cache
from math import factorial
from typing import Optional, Sequence

import numpy as np
from scipy.integrate import quad, quad_vec

from ..curves import SMOOTH, Curve, PiecewiseCurve, ReparametrizedCurve
from ..curves.jets import exp_derivatives
from ..evolution import evolve
from ..groups import GroupSpec
from ..lcvs import sup_seminorm
from ..models.evolve_config import EvolveConfig
from ..models.results import IdentityResidual
from ..models.vector_spec import Seminorm

logger = logging.getLogger(__name__)


def _exponent_derivatives(t: np.ndarray, m: int) -> np.ndarray:
    """Derivatives of f(t) = -1/(4 t (1 - t)) = -(1/t + 1/(1 - t))/4 on (0, 1)."""
    out = np.empty((m + 1, t.size))
    for j in range(m + 1):
        out[j] = -0.25 * factorial(j) * ((-1.0) ** j / t ** (j + 1) + 1.0 / (1.0 - t) ** (j + 1))
    return out


class BumpProfile:
    """
    rho_hat(t) = c0 exp(-1/(4 t (1 - t))) on (0, 1), zero elsewhere.

    A smooth probability density on [0, 1], flat to all orders at both
    ends, with maximum rho_hat(1/2) ~ 1.66.
    """

    def __init__(self):
        mass, _ = quad(lambda t: np.exp(-0.25 / (t * (1.0 - t))), 0.0, 1.0, epsabs=1e-16, epsrel=1e-15, limit=200)
        self.c0 = 1.0 / mass

    def __call__(self, t, s: int = 0) -> np.ndarray:
        """rho_hat^(s) at t (vectorized)."""
        t = np.asarray(t, dtype=float)
        inside = (t > 0.0) & (t < 1.0)
        out = np.zeros_like(t)
        if np.any(inside):
            out[inside] = self.c0 * exp_derivatives(_exponent_derivatives(t[inside], s))[s]
        return out

    def antiderivative(self, tau) -> np.ndarray:
        """B(tau) = int_0^tau rho_hat, using B(tau) = 1 - B(1 - tau) above 1/2."""
        tau = np.clip(np.atleast_1d(np.asarray(tau, dtype=float)), 0.0, 1.0)
        low = np.minimum(tau, 1.0 - tau)
        partial, _ = quad_vec(lambda u: low * self(low * u), 0.0, 1.0, epsabs=1e-15, epsrel=1e-14)
        return np.where(tau <= 0.5, partial, 1.0 - partial)

    def mass(self) -> float:
        value, _ = quad(lambda t: float(self(t)), 0.0, 1.0, epsabs=1e-15, epsrel=1e-14, limit=200)
        return value

    def validate(self, points: int = 4097, max_order: int = 6) -> bool:
        """Positivity, unit mass, range [0, 2] and flat ends (sampled)."""
        t = np.linspace(0.0, 1.0, points)
        values = self(t)
        if np.any(values[1:-1] <= 0.0) or np.any(values > 2.0) or np.any(values < 0.0):
            return False
        if abs(self.mass() - 1.0) > 1e-12:
            return False
        ends = np.array([0.0, 1.0])
        return all(np.all(np.abs(self(ends, s)) < 1e-12) for s in range(max_order + 1))


@lru_cache()
def bump() -> BumpProfile:
    """The shared bump profile."""
    return BumpProfile()


class BumpReparam(Curve):
    """
    t -> offset + delta B((t - a)/delta) on [a, b], delta = b - a.

    Its derivative is rho_hat((t - a)/delta), so all derivatives of order
    >= 1 vanish at a and b.
    """

    def __init__(self, a: float, b: float, offset: Optional[float] = None):
        super().__init__(a, b, 1, SMOOTH)
        self.delta = b - a
        self.offset = a if offset is None else float(offset)
        self.profile = bump()

    def _evaluate(self, t, s):
        kappa = (t - self.start) / self.delta
        if s == 0:
            return (self.offset + self.delta * self.profile.antiderivative(kappa))[:, None]
        return (self.profile(kappa, s - 1) / self.delta ** (s - 1))[:, None]


class GluedCurve(Curve):
    """
    A curve assembled from pieces on consecutive intervals that join smoothly.

    Unlike PiecewiseCurve it is treated as a single smooth curve by
    quadrature and evolution.
    """

    def __init__(self, breakpoints: Sequence[float], pieces: Sequence[Curve]):
        self.pieces = PiecewiseCurve(breakpoints, pieces)
        super().__init__(self.pieces.start, self.pieces.end, self.pieces.dim, self.pieces.order)

    @property
    def breakpoints(self) -> np.ndarray:
        return self.pieces.breakpoints

    def _evaluate(self, t, s):
        return self.pieces.evaluate(t, s)

    def jumps(self, s: int = 0) -> np.ndarray:
        """Max-abs jump of the s-th derivative at each interior joint."""
        return self.pieces.jumps(s)


def reparam_profile(breakpoints: Sequence[float]) -> GluedCurve:
    """Glued rho with rho(t_p) = t_p and all derivatives of order >= 1 vanishing at each t_p."""
    breakpoints = np.asarray(breakpoints, dtype=float)
    return GluedCurve(breakpoints, [BumpReparam(a, b) for a, b in zip(breakpoints[:-1], breakpoints[1:])])


def smooth_piecewise(pw: PiecewiseCurve) -> GluedCurve:
    """psi = rho' . (phi o rho) with the glued reparametrization; int psi = int phi."""
    pieces = [ReparametrizedCurve(seg, BumpReparam(a, b), weighted=True)
              for seg, a, b in zip(pw.segments, pw.breakpoints[:-1], pw.breakpoints[1:])]
    return GluedCurve(pw.breakpoints, pieces)


def smoothing_residual(group: GroupSpec, pw: PiecewiseCurve, cfg: Optional[EvolveConfig] = None) -> IdentityResidual:
    """Chart distance between the endpoints of int psi and the segment-wise int phi."""
    cfg = cfg or EvolveConfig()
    smoothed = evolve(group, smooth_piecewise(pw), cfg)
    original = evolve(group, pw, cfg)
    return IdentityResidual(group.distance(smoothed.endpoint, original.endpoint),
                            smoothed.estimate + original.estimate)


def sup_inflation(pw: PiecewiseCurve, q: Seminorm, points: int = 2049) -> float:
    """q_inf(psi) / q_inf(phi); bounded by max rho_hat <= 2."""
    base = sup_seminorm(pw, q, points)
    return sup_seminorm(smooth_piecewise(pw), q, points) / base if base > 0 else 0.0
