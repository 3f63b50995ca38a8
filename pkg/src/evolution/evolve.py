"""
Product integrals by composition schemes.
"""
import logging
from typing import Optional

import numpy as np

from ..curves import ConstantCurve, Curve, PiecewiseCurve
from ..exceptions import ContractViolation, IntegrationError, StepLimitError
from ..groups import GroupSpec
from ..models.evolve_config import EvolveConfig
from .result import EvolutionResult
from .schemes import get_scheme

logger = logging.getLogger(__name__)


def _check(group: GroupSpec, phi: Curve) -> None:
    if phi.dim != group.dim:
        raise ContractViolation(f"integrand has dimension {phi.dim}, {group.name} expects {group.dim}")


def _run(group: GroupSpec, phi: Curve, scheme_name: str, n: int) -> EvolutionResult:
    scheme = get_scheme(scheme_name)
    times = np.linspace(phi.start, phi.end, n + 1)
    h = (phi.end - phi.start) / n
    identity = group.identity()
    elements = np.empty((n + 1,) + identity.shape, dtype=identity.dtype)
    elements[0] = identity
    if isinstance(phi, ConstantCurve):
        # exp((t - r) X) is the exact evolution of a constant integrand
        for k in range(1, n + 1):
            elements[k] = group.exp((times[k] - times[0]) * phi.value)
        return EvolutionResult(group, phi, scheme, times, elements, h)

    values = phi.evaluate(scheme.node(times[:-1], h))
    for k in range(n):
        elements[k + 1] = group.mult(group.exp(h * values[k]), elements[k])
        if not np.all(np.isfinite(elements[k + 1])):
            raise IntegrationError("evolution left the numerical range", t=float(times[k + 1]))
    return EvolutionResult(group, phi, scheme, times, elements, h)


def _estimate(group: GroupSpec, coarse: EvolutionResult, fine: EvolutionResult, order: int) -> dict:
    """sup over shared nodes of the chart distance, scaled by 2^q / (2^q - 1), per seminorm."""
    factor = 2.0 ** order / (2.0 ** order - 1.0)
    estimates = {}
    for p in group.algebra.seminorms:
        gap = max(group.distance(coarse.elements[k], fine.elements[2 * k], p) for k in range(coarse.steps + 1))
        estimates[p.name] = factor * gap
    return estimates


def evolve(group: GroupSpec, phi: Curve, cfg: Optional[EvolveConfig] = None) -> EvolutionResult:
    """
    Product integral of phi with a fixed step, plus a single-halving error estimate.

    With only a target tolerance configured, the step starts at L/16 and is
    halved until the estimate meets the target.

    Raises:
        StepLimitError: If the step count would exceed cfg.max_steps
        IntegrationError: If the elements overflow
    """
    cfg = cfg or EvolveConfig()
    _check(group, phi)
    if isinstance(phi, PiecewiseCurve):
        return evolve_piecewise(group, phi, cfg)
    if cfg.step is None:
        return _evolve_to_tolerance(group, phi, cfg)
    n = cfg.steps_for(phi.length)
    result = _run(group, phi, cfg.scheme, n)
    if cfg.estimate and not isinstance(phi, ConstantCurve):
        fine = _run(group, phi, cfg.scheme, 2 * n)
        result.error_estimate = _estimate(group, result, fine, result.scheme.order)
    else:
        result.error_estimate = {p.name: 0.0 for p in group.algebra.seminorms}
    logger.debug("evolved %s on %s with %d %s steps, estimate %.3e",
                 type(phi).__name__, group.name, n, cfg.scheme, result.estimate)
    return result


def _evolve_to_tolerance(group: GroupSpec, phi: Curve, cfg: EvolveConfig) -> EvolutionResult:
    h = phi.length / 16
    while True:
        result = evolve(group, phi, EvolveConfig(cfg.scheme, h, None, cfg.max_steps, True))
        if result.estimate <= cfg.tolerance:
            return result
        h /= 2
        if cfg.steps_for(phi.length, h) > cfg.max_steps // 2:
            raise StepLimitError(f"tolerance {cfg.tolerance:g} not reached before the step limit")


def evolve_piecewise(group: GroupSpec, pw: PiecewiseCurve, cfg: Optional[EvolveConfig] = None) -> EvolutionResult:
    """
    Segment-wise evolution composed right to left.

    On segment p the curve is int_{t_p}^t phi_p times the product of all
    earlier segment endpoints; error estimates add up over segments.
    """
    cfg = cfg or EvolveConfig()
    _check(group, pw)
    times, elements = [np.array([pw.start])], [group.identity()[None]]
    offset = group.identity()
    estimates = {p.name: 0.0 for p in group.algebra.seminorms}
    step = None
    bounds = [0]
    for seg in pw.segments:
        local = evolve(group, seg, cfg)
        bounds.append(bounds[-1] + local.steps)
        step = local.step if step is None else max(step, local.step)
        moved = np.stack([group.mult(g, offset) for g in local.elements[1:]])
        times.append(local.times[1:])
        elements.append(moved)
        offset = moved[-1]
        for name, value in local.error_estimate.items():
            estimates[name] += value
    result = EvolutionResult(group, pw, get_scheme(cfg.scheme), np.concatenate(times),
                             np.concatenate(elements), step, estimates, tuple(bounds))
    return result
