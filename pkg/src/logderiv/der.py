"""
The right logarithmic derivative Der(mu) = dR_{mu^-1}(mu') and residuals
of its algebraic identities.
"""
import logging
from typing import Optional

import numpy as np

from ..curves import Curve, FunctionCurve
from ..exceptions import ContractViolation, InversionError
from ..models.vector_spec import Seminorm
from .group_curve import GroupCurve

logger = logging.getLogger(__name__)

RESIDUAL_POINTS = 257
ANALYTIC_TOL = 1e-8
FINITE_DIFFERENCE_TOL = 1e-5
FD_RELATIVE_STEP = 1e-4

# One-sided 4th-order first-derivative weights at offsets 0..4
_FORWARD = np.array([-25.0, 48.0, -36.0, 16.0, -3.0]) / 12.0


def _chart_increment(mu: GroupCurve, t: float, base_inv: np.ndarray, eps: float) -> np.ndarray:
    g = mu.group
    return g.chart(g.mult(mu(t + eps), base_inv))


def der_at(mu: GroupCurve, t: float, h: Optional[float] = None) -> np.ndarray:
    """
    Der(mu)(t) in algebra coordinates.

    Uses the analytic tangent when declared; otherwise differentiates
    eps -> Xi(mu(t + eps) mu(t)^-1) at 0 with 4th-order differences
    (central inside, one-sided near the ends).

    Raises:
        InversionError: If mu(t) is singular, with t
    """
    g = mu.group
    value = mu(t)
    try:
        base_inv = g.inv(value)
    except InversionError as exc:
        raise InversionError(f"cannot invert {mu.name}", t=t) from exc
    if mu.has_tangent:
        return g.right_trivialize(value, mu.tangent(t))
    h = h or FD_RELATIVE_STEP * mu.length
    if t - 2 * h >= mu.start and t + 2 * h <= mu.end:
        f = [_chart_increment(mu, t, base_inv, k * h) for k in (-2, -1, 1, 2)]
        return (f[0] - 8 * f[1] + 8 * f[2] - f[3]) / (12 * h)
    sign = 1.0 if t - 2 * h < mu.start else -1.0
    f = [np.zeros(g.dim)] + [_chart_increment(mu, t, base_inv, sign * k * h) for k in range(1, 5)]
    return sign * sum(w * fk for w, fk in zip(_FORWARD, f)) / h


def der(mu: GroupCurve) -> Curve:
    """
    Right logarithmic derivative as an algebra-valued curve.

    Values come from der_at; derivatives of the result are not provided
    numerically beyond order 0.
    """
    if mu.order < 1:
        raise ContractViolation(f"Der needs a C^1 curve, {mu.name} has order {mu.order}")

    def evaluate(t: np.ndarray, s: int) -> np.ndarray:
        return np.stack([der_at(mu, float(ti)) for ti in t])

    return FunctionCurve(evaluate, mu.group.dim, mu.start, mu.end, order=0, name=f"Der({mu.name})")


def residual_tolerance(*curves: GroupCurve) -> float:
    """1e-8 when every curve carries an analytic tangent, else 1e-5."""
    return ANALYTIC_TOL if all(c.has_tangent for c in curves) else FINITE_DIFFERENCE_TOL


def _sup(mu: GroupCurve, residual, points: int, seminorm: Optional[Seminorm]) -> float:
    p = seminorm or mu.group.algebra.default
    t = np.linspace(mu.start, mu.end, points)
    return float(max(p(residual(float(ti))) for ti in t))


def product_rule_residual(mu: GroupCurve, nu: GroupCurve, points: int = RESIDUAL_POINTS,
                          seminorm: Optional[Seminorm] = None) -> float:
    """sup_t p(Der(mu nu) - Der(mu) - Ad_mu Der(nu))."""
    g = mu.group
    prod = mu.product(nu)
    return _sup(mu, lambda t: der_at(prod, t) - der_at(mu, t) - g.Ad(mu(t), der_at(nu, t)), points, seminorm)


def inverse_rule_residual(mu: GroupCurve, points: int = RESIDUAL_POINTS,
                          seminorm: Optional[Seminorm] = None) -> float:
    """sup_t p(Der(mu^-1) + Ad_{mu^-1} Der(mu))."""
    g = mu.group
    inv = mu.inverse()
    return _sup(mu, lambda t: der_at(inv, t) + g.Ad(g.inv(mu(t)), der_at(mu, t)), points, seminorm)


def quotient_rule_residual(mu: GroupCurve, nu: GroupCurve, points: int = RESIDUAL_POINTS,
                           seminorm: Optional[Seminorm] = None) -> float:
    """sup_t p(Der(mu^-1 nu) - Ad_{mu^-1}(Der(nu) - Der(mu)))."""
    g = mu.group
    quot = mu.quotient(nu)
    return _sup(mu, lambda t: der_at(quot, t) - g.Ad(g.inv(mu(t)), der_at(nu, t) - der_at(mu, t)),
                points, seminorm)


def substitution_rule_residual(mu: GroupCurve, rho: Curve, points: int = RESIDUAL_POINTS,
                               seminorm: Optional[Seminorm] = None) -> float:
    """sup_t p(Der(mu o rho)(t) - rho'(t) Der(mu)(rho(t)))."""
    composed = mu.compose(rho)

    def residual(t: float) -> np.ndarray:
        inner = float(np.clip(rho.evaluate(t)[0], mu.start, mu.end))
        return der_at(composed, t) - rho.evaluate(t, 1)[0] * der_at(mu, inner)

    return _sup(composed, residual, points, seminorm)


def left_translation_residual(mu: GroupCurve, h: np.ndarray, points: int = RESIDUAL_POINTS,
                              seminorm: Optional[Seminorm] = None) -> float:
    """sup_t p(Der(h mu) - Ad_h Der(mu))."""
    g = mu.group
    moved = mu.left_translate(h)
    return _sup(mu, lambda t: der_at(moved, t) - g.Ad(h, der_at(mu, t)), points, seminorm)


def right_translation_residual(mu: GroupCurve, h: np.ndarray, points: int = RESIDUAL_POINTS,
                               seminorm: Optional[Seminorm] = None) -> float:
    """sup_t p(Der(mu h) - Der(mu))."""
    moved = mu.right_translate(h)
    return _sup(mu, lambda t: der_at(moved, t) - der_at(mu, t), points, seminorm)


def right_translation_gap(mu: GroupCurve, nu: GroupCurve, points: int = RESIDUAL_POINTS) -> tuple:
    """
    (sup p(Der mu - Der nu), sup dist(mu(t) mu(r)^-1, nu(t) nu(r)^-1)).

    Equal logarithmic derivatives force nu = mu g for a constant g, so the
    second entry must vanish whenever the first does.
    """
    g = mu.group
    der_gap = _sup(mu, lambda t: der_at(mu, t) - der_at(nu, t), points, None)
    mu0_inv, nu0_inv = g.inv(mu(mu.start)), g.inv(nu(nu.start))
    t = np.linspace(mu.start, mu.end, points)
    curve_gap = max(g.distance(g.mult(mu(ti), mu0_inv), g.mult(nu(ti), nu0_inv)) for ti in t)
    return der_gap, float(curve_gap)
