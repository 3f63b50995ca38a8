"""
Residual checks of the product-integral identities.

Every check compares two independently computed evolutions and returns an
IdentityResidual carrying the combined Richardson estimate, so callers can
test "residual <= k x estimate".
"""
import logging
from typing import Dict, Optional, Sequence

import numpy as np

from ..curves import (Curve, FunctionCurve, PiecewiseCurve, PolynomialCurve, ReparametrizedCurve, ReversedCurve,
                      from_curve)
from ..exceptions import ContractViolation
from ..groups import GroupSpec, Homomorphism
from ..lcvs import convergence_order, riemann_integral
from ..models.evolve_config import EvolveConfig
from ..models.results import IdentityResidual
from .evolve import evolve, evolve_piecewise
from .result import EvolutionResult

logger = logging.getLogger(__name__)

# One-sided 4th-order first-derivative weights on five nodes, for the
# first and second of them
_ONE_SIDED = (np.array([-25.0, 48.0, -36.0, 16.0, -3.0]) / 12.0,
              np.array([-3.0, -10.0, 18.0, -6.0, 1.0]) / 12.0)


def grid_der(group: GroupSpec, result: EvolutionResult) -> np.ndarray:
    """
    Der of a sampled evolution at its nodes.

    Differentiates j -> Xi(mu_{k+j} mu_k^-1) with 4th-order differences on
    each uniform segment: central inside, one-sided within the segment at
    the two nodes next to each end. A breakpoint node
    takes the value of the segment starting there.
    """
    if min(last - first for first, last in result.segments) < 4:
        raise ContractViolation("grid derivatives need at least 4 steps per segment")
    out = np.empty((result.steps + 1, group.dim))
    for first, last in result.segments:
        h = (result.times[last] - result.times[first]) / (last - first)
        for k in range(first, last + 1):
            base_inv = group.inv(result.elements[k])
            inc = lambda j: group.chart(group.mult(result.elements[k + j], base_inv)) if j else 0.0
            if first + 2 <= k <= last - 2:
                out[k] = (inc(-2) - 8 * inc(-1) + 8 * inc(1) - inc(2)) / (12 * h)
            elif k < first + 2:
                i = k - first
                out[k] = sum(w * inc(m - i) for m, w in enumerate(_ONE_SIDED[i])) / h
            else:
                i = last - k
                out[k] = -sum(w * inc(i - m) for m, w in enumerate(_ONE_SIDED[i])) / h
    return out


def reconstruct_residual(group: GroupSpec, phi: Curve, cfg: Optional[EvolveConfig] = None) -> float:
    """sup over nodes of p(Der(int phi) - phi), p the default seminorm."""
    cfg = cfg or EvolveConfig()
    result = evolve(group, phi, EvolveConfig(cfg.scheme, cfg.step, cfg.tolerance, cfg.max_steps, False))
    shortest = min(result.times[last] - result.times[first] for first, last in result.segments)
    if min(last - first for first, last in result.segments) < 4:
        result = evolve(group, phi, EvolveConfig(cfg.scheme, shortest / 4, None, cfg.max_steps, False))
    p = group.algebra.default
    return float(np.max(p(grid_der(group, result) - phi.evaluate(result.times))))


def _sup_distance(group: GroupSpec, lhs: Sequence[np.ndarray], rhs: Sequence[np.ndarray]) -> float:
    return float(max(group.distance(a, b) for a, b in zip(lhs, rhs)))


def concat_residual(group: GroupSpec, phi: Curve, breakpoints: Sequence[float],
                    cfg: Optional[EvolveConfig] = None) -> IdentityResidual:
    """Chart distance between int phi and the segment-wise composed product."""
    cfg = cfg or EvolveConfig()
    whole = evolve(group, phi, cfg)
    pieces = evolve_piecewise(group, from_curve(phi, breakpoints), cfg)
    return IdentityResidual(group.distance(whole.endpoint, pieces.endpoint), whole.estimate + pieces.estimate)


def reverse(phi: Curve) -> Curve:
    """phi_check(t) = -phi(r + r' - t); piecewise curves stay piecewise over the mirrored breakpoints."""
    if not isinstance(phi, PiecewiseCurve):
        return ReversedCurve(phi, negate=True)
    mirror = phi.start + phi.end
    segments = [ReparametrizedCurve(seg, PolynomialCurve([[mirror], [-1.0]], mirror - seg.end, mirror - seg.start))
                for seg in reversed(phi.segments)]
    return PiecewiseCurve(mirror - phi.breakpoints[::-1], segments)


def reverse_residual(group: GroupSpec, phi: Curve, cfg: Optional[EvolveConfig] = None) -> IdentityResidual:
    """Chart distance of (int phi_check)(int phi) from e."""
    cfg = cfg or EvolveConfig()
    forward = evolve(group, phi, cfg)
    backward = evolve(group, reverse(phi), cfg)
    return IdentityResidual(group.distance(group.identity(), group.mult(backward.endpoint, forward.endpoint)),
                            forward.estimate + backward.estimate)


def substitution_check(group: GroupSpec, phi: Curve, rho: Curve, cfg: Optional[EvolveConfig] = None,
                       points: int = 33) -> IdentityResidual:
    """
    Substitution rule for a monotone rho: [l, l'] -> [r, r'].

    Compares int_r^{rho(t)} phi with [int_l^t rho' phi(rho)] int_r^{rho(l)} phi
    on a grid of t; for surjective rho the offset factor is e and the
    endpoint comparison is the plain rule.
    """
    cfg = cfg or EvolveConfig()
    original = evolve(group, phi, cfg)
    psi = ReparametrizedCurve(phi, rho, weighted=True)
    substituted = evolve(group, psi, cfg)
    offset = original.at(float(rho.evaluate(rho.start)[0]))
    t = np.linspace(rho.start, rho.end, points)
    lhs = [original.at(float(rho.evaluate(ti)[0])) for ti in t]
    rhs = [group.mult(substituted.at(ti), offset) for ti in t]
    return IdentityResidual(_sup_distance(group, lhs, rhs), original.estimate + substituted.estimate)


def _split_like(curve: Curve, *curves: Curve) -> Curve:
    """curve viewed as piecewise over the union of the breakpoints of the piecewise curves given."""
    breaks = [c.breakpoints for c in curves if isinstance(c, PiecewiseCurve)]
    if not breaks:
        return curve
    points = np.unique(np.concatenate(breaks))
    if not isinstance(curve, PiecewiseCurve):
        return from_curve(curve, points)
    for t in points[1:-1]:
        curve = curve.refine(float(t))
    return curve


def _transported(group: GroupSpec, base: EvolutionResult, integrand, name: str, *like: Curve) -> Curve:
    """Curve t -> integrand(mu(t), t) along a computed evolution mu, split like the given curves."""
    def evaluate(t: np.ndarray, s: int) -> np.ndarray:
        return np.stack([integrand(base.at(float(ti)), float(ti)) for ti in t])
    return _split_like(FunctionCurve(evaluate, group.dim, base.times[0], base.times[-1], name=name), *like)


def _grid_residual(group: GroupSpec, lhs, rhs: EvolutionResult, estimates: float) -> IdentityResidual:
    """sup over the nodes t of rhs of the distance between lhs(t) and rhs(t)."""
    values = [lhs(float(t)) for t in rhs.times]
    return IdentityResidual(_sup_distance(group, values, rhs.elements), estimates + rhs.estimate)


def product_identity_residual(group: GroupSpec, phi: Curve, psi: Curve,
                              cfg: Optional[EvolveConfig] = None) -> IdentityResidual:
    """(int^t phi)(int^t psi) = int^t (phi + Ad_{int phi} psi)."""
    cfg = cfg or EvolveConfig()
    mu = evolve(group, _split_like(phi, phi, psi), cfg)
    nu = evolve(group, _split_like(psi, phi, psi), cfg)
    chi = _transported(group, mu, lambda g, t: phi.evaluate(t) + group.Ad(g, psi.evaluate(t)), "phi+Ad(psi)",
                       phi, psi)
    rhs = evolve(group, chi, cfg)
    return _grid_residual(group, lambda t: group.mult(mu.at(t), nu.at(t)), rhs, mu.estimate + nu.estimate)


def quotient_identity_residual(group: GroupSpec, phi: Curve, psi: Curve,
                               cfg: Optional[EvolveConfig] = None) -> IdentityResidual:
    """(int^t phi)^-1 (int^t psi) = int^t Ad_{(int phi)^-1}(psi - phi)."""
    cfg = cfg or EvolveConfig()
    mu = evolve(group, _split_like(phi, phi, psi), cfg)
    nu = evolve(group, _split_like(psi, phi, psi), cfg)
    chi = _transported(group, mu, lambda g, t: group.Ad(group.inv(g), psi.evaluate(t) - phi.evaluate(t)),
                       "Ad(psi-phi)", phi, psi)
    rhs = evolve(group, chi, cfg)
    return _grid_residual(group, lambda t: group.mult(group.inv(mu.at(t)), nu.at(t)), rhs,
                          mu.estimate + nu.estimate)


def inverse_identity_residual(group: GroupSpec, phi: Curve,
                              cfg: Optional[EvolveConfig] = None) -> IdentityResidual:
    """(int^t phi)^-1 = int^t (-Ad_{(int phi)^-1} phi)."""
    cfg = cfg or EvolveConfig()
    mu = evolve(group, phi, cfg)
    chi = _transported(group, mu, lambda g, t: -group.Ad(group.inv(g), phi.evaluate(t)), "-Ad(phi)", phi)
    rhs = evolve(group, chi, cfg)
    return _grid_residual(group, lambda t: group.inv(mu.at(t)), rhs, mu.estimate)


def hom_transport_residual(phi: Curve, hom: Homomorphism, cfg: Optional[EvolveConfig] = None) -> IdentityResidual:
    """Psi(int^t phi) = int^t (dPsi o phi), compared in the target group."""
    cfg = cfg or EvolveConfig()
    source = evolve(hom.source, phi, cfg)
    pushed = FunctionCurve(lambda t, s: np.stack([hom.differential(x) for x in phi.evaluate(t)]),
                           hom.target.dim, phi.start, phi.end, name="dPsi(phi)")
    target = evolve(hom.target, _split_like(pushed, phi), cfg)
    return _grid_residual(hom.target, lambda t: hom.apply(source.at(t)), target, source.estimate)


def abelian_closed_form_residual(group: GroupSpec, phi: Curve, cfg: Optional[EvolveConfig] = None) -> float:
    """
    |Xi(int phi) - int phi(s) ds| for abelian groups with exponential chart.

    The chart values at h and h/2 are combined by one Richardson step of the
    scheme's order before comparing.
    """
    if not group.abelian:
        raise ContractViolation(f"{group.name} is not abelian")
    cfg = cfg or EvolveConfig()
    fixed = EvolveConfig(cfg.scheme, cfg.step or 2.0 ** -7, None, cfg.max_steps, False)
    coarse = evolve(group, phi, fixed)
    fine = evolve(group, phi, fixed.with_step(coarse.step / 2))
    q = 1 if cfg.scheme == "lie_euler" else 2
    x_coarse, x_fine = group.chart(coarse.endpoint), group.chart(fine.endpoint)
    value = x_fine + (x_fine - x_coarse) / (2 ** q - 1)
    return float(group.algebra.default(value - riemann_integral(phi)))


def convergence_orders(group: GroupSpec, phi: Curve, scheme: str, steps: Sequence[float],
                       oracle_step: float) -> Dict[str, object]:
    """
    Endpoint errors over a step ladder against a fine-step oracle.

    Returns:
        dict with keys "steps", "errors", "pairwise" (log2 ratios) and "order"
        (least-squares slope)
    """
    base = EvolveConfig(scheme, oracle_step, None, 1 << 24, False)
    oracle = evolve(group, phi, base).endpoint
    errors = []
    for h in steps:
        endpoint = evolve(group, phi, base.with_step(h)).endpoint
        errors.append(group.distance(oracle, endpoint))
    errors = np.asarray(errors)
    logger.info("%s on %s: errors %s", scheme, group.name, np.array2string(errors, precision=3))
    return {
        "steps": np.asarray(steps, dtype=float),
        "errors": errors,
        "pairwise": np.log2(errors[:-1] / errors[1:]),
        "order": convergence_order(steps, errors),
    }
