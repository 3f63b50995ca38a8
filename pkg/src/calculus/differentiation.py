"""
Derivatives of product integrals compared with their integral formulas.

Every numerical derivative here is a central difference of a chart
quotient Xi(g^-1 g(h)), Richardson-extrapolated over the difference step
and over the scheme step so that neither the difference bias nor the
scheme bias dominates the comparison.
"""
import logging
from typing import Callable, Dict, Optional, Sequence

import numpy as np

from ..adjoint import dexp_factor, omori_transport
from ..config.settings import get_settings
from ..curves import Curve
from ..evolution import evolve, get_scheme
from ..exceptions import ContractViolation, HypothesisViolation, OutOfChartError
from ..groups import GroupSpec
from ..lcvs import (convergence_order, integrate_callable, integrate_samples, richardson_extrapolate,
                    riemann_integral, sup_seminorm)
from ..models.evolve_config import EvolveConfig
from ..models.results import DerivativeComparison, DuhamelResult
from .families import ParamFamily, affine_family

logger = logging.getLogger(__name__)

SCALING_STEPS = 2.0 ** -np.arange(3, 11)
HYPOTHESIS_STEPS = 2.0 ** -np.arange(2, 13)
TRANSPORT_STEPS = 1024
SLOPE_STEPS = (0.1, 0.05, 0.025, 0.0125)


def _fixed(cfg: Optional[EvolveConfig], step: Optional[float] = None) -> EvolveConfig:
    cfg = cfg or EvolveConfig()
    return EvolveConfig(cfg.scheme, step or cfg.step or 2.0 ** -7, None, cfg.max_steps, False)


def _extrapolate_scheme(fn: Callable[[EvolveConfig], np.ndarray], cfg: EvolveConfig) -> np.ndarray:
    """Combine runs at h and h/2 to cancel the leading scheme error."""
    factor = 2.0 ** get_scheme(cfg.scheme).order - 1.0
    coarse = fn(cfg)
    fine = fn(cfg.with_step(cfg.step / 2))
    return fine + (fine - coarse) / factor


def _gaps(group: GroupSpec, numeric: np.ndarray, formula: np.ndarray) -> Dict[str, float]:
    return {p.name: float(p(numeric - formula)) for p in group.algebra.seminorms}


def _compare(group: GroupSpec, numeric, formula, detail: Optional[dict] = None) -> DerivativeComparison:
    return DerivativeComparison(numeric, formula, _gaps(group, numeric, formula), group.algebra.default.name,
                                detail or {})


def directional_derivative_at_zero(group: GroupSpec, phi: Curve, cfg: Optional[EvolveConfig] = None,
                                   steps: Sequence[float] = SCALING_STEPS) -> DerivativeComparison:
    """
    d/dh|_0 Xi(int h phi) against int phi.

    Raises:
        OutOfChartError: If even the smallest h leaves the chart
    """
    cfg = _fixed(cfg)
    steps = np.sort(np.asarray(steps, dtype=float))[::-1]

    def at(c: EvolveConfig) -> np.ndarray:
        used, values = [], []
        for h in steps:
            try:
                values.append(group.chart(evolve(group, phi.scaled(h), c).endpoint) / h)
                used.append(h)
            except OutOfChartError:
                if h == steps[-1]:
                    raise
                logger.debug("h=%g leaves the chart of %s, skipped", h, group.name)
        value, _ = richardson_extrapolate(used, values, order=1, order_step=1)
        return value

    numeric = _extrapolate_scheme(at, cfg)
    return _compare(group, numeric, riemann_integral(phi), {"steps": len(steps)})


def transported_integral(group: GroupSpec, phi: Curve, psi: Curve, cfg: Optional[EvolveConfig] = None,
                         n: int = TRANSPORT_STEPS, method: str = "evolution") -> np.ndarray:
    """
    int Ad_{[int_r^s phi]^-1}(psi(s)) ds.

    ``method="evolution"`` applies Ad of the inverted evolution elements;
    ``method="omori"`` transports a basis with alpha' = [phi, alpha] and
    inverts the resulting Ad matrices.
    """
    if psi.interval != phi.interval:
        raise ContractViolation("phi and psi must live on the same interval")
    if method not in ("evolution", "omori"):
        raise ContractViolation(f"unknown transport method {method!r}")

    def at(c: EvolveConfig) -> np.ndarray:
        if method == "evolution":
            res = evolve(group, phi, c)
            times = res.times
            values = np.stack([group.Ad(group.inv(g), v) for g, v in zip(res.elements, psi.evaluate(times))])
        else:
            columns = [omori_transport(group, phi, e, c) for e in np.eye(group.dim)]
            times = columns[0].times
            ad = np.stack([col.values for col in columns], axis=2)
            values = np.linalg.solve(ad, psi.evaluate(times)[:, :, None])[:, :, 0]
        return integrate_samples(values, times)

    return _extrapolate_scheme(at, _fixed(cfg, phi.length / n))


def check_difference_quotients(group: GroupSpec, fam: ParamFamily, x: float,
                               steps: Sequence[float] = HYPOTHESIS_STEPS, points: int = 257) -> Dict[str, float]:
    """
    Sampled difference-quotient bound (1/|h|) sup_t p(Phi(x+h, t) - Phi(x, t)) for each seminorm.

    Only h with x +- h inside the parameter interval are sampled.

    Raises:
        HypothesisViolation: If a declared bound L_{p,0} is exceeded
    """
    base = fam.curve(x)
    worst: Dict[str, float] = {}
    for h in steps:
        for signed in (h, -h):
            if not fam.domain[0] < x + signed < fam.domain[1]:
                continue
            diff = fam.curve(x + signed) - base
            for p in group.algebra.seminorms:
                ratio = sup_seminorm(diff, p, points) / h
                bound = fam.lipschitz.get(p.name)
                if bound is not None and ratio > bound:
                    raise HypothesisViolation(p.name, 0, float(signed), ratio, bound)
                worst[p.name] = max(worst.get(p.name, 0.0), ratio)
    return worst


def _family_quotient(group: GroupSpec, fam: ParamFamily, x: float, cfg: EvolveConfig):
    base_inv = group.inv(evolve(group, fam.curve(x), cfg).endpoint)

    def quotient(h: float) -> np.ndarray:
        plus = group.chart(group.mult(base_inv, evolve(group, fam.curve(x + h), cfg).endpoint))
        minus = group.chart(group.mult(base_inv, evolve(group, fam.curve(x - h), cfg).endpoint))
        return (plus - minus) / (2 * h)
    return quotient


def param_derivative(group: GroupSpec, fam: ParamFamily, x: float, cfg: Optional[EvolveConfig] = None,
                     steps: Optional[Sequence[float]] = None, check_hypothesis: bool = True,
                     method: str = "evolution") -> DerivativeComparison:
    """
    d/dx Xi([int Phi(x, .)]^-1 int Phi(x+h, .)) against int Ad_{[int_r^s Phi(x, .)]^-1}(d_x Phi(x, s)) ds.

    The difference-quotient hypothesis is sampled on a log grid of h and
    reported in ``detail["hypothesis"]`` (marked as sampled).

    Raises:
        HypothesisViolation: If a declared difference-quotient bound fails on a sample
    """
    steps = tuple(steps or get_settings().fd_steps)
    cfg = _fixed(cfg)
    detail: dict = {"sampled": True}
    if check_hypothesis:
        detail["hypothesis"] = check_difference_quotients(group, fam, x)
        if fam.partial is not None:
            detail["partial_error"] = fam.partial_error(x)

    def at(c: EvolveConfig) -> np.ndarray:
        quotient = _family_quotient(group, fam, x, c)
        value, _ = richardson_extrapolate(steps, [quotient(h) for h in steps], order=2, order_step=2)
        return value

    numeric = _extrapolate_scheme(at, cfg)
    formula = transported_integral(group, fam.curve(x), fam.partial_curve(x), cfg, method=method)
    result = _compare(group, numeric, formula, detail)
    logger.debug("param derivative of %s on %s at x=%g: gap %.3e", fam.name, group.name, x, result.gap)
    return result


def param_derivative_slope(group: GroupSpec, fam: ParamFamily, x: float, cfg: Optional[EvolveConfig] = None,
                           steps: Sequence[float] = SLOPE_STEPS) -> float:
    """Observed order of the plain central difference against the integral formula."""
    cfg = _fixed(cfg)
    formula = transported_integral(group, fam.curve(x), fam.partial_curve(x), cfg)
    p = group.algebra.default

    def quotients(c: EvolveConfig) -> np.ndarray:
        quotient = _family_quotient(group, fam, x, c)
        return np.stack([quotient(h) for h in steps])

    values = _extrapolate_scheme(quotients, cfg)
    return convergence_order(steps, [float(p(v - formula)) for v in values])


def evol_differential(group: GroupSpec, phi: Curve, psi: Curve, cfg: Optional[EvolveConfig] = None,
                      trivialized: bool = True) -> np.ndarray:
    """
    (d_phi Evol)(psi) = dL_{int phi}(int Ad_{[int_r^s phi]^-1}(psi(s)) ds).

    Returns the left-trivialized algebra coordinates by default, the
    ambient tangent vector at int phi when ``trivialized=False``.
    """
    coords = transported_integral(group, phi, psi, cfg)
    if trivialized:
        return coords
    g = evolve(group, phi, _fixed(cfg)).endpoint
    e = group.identity()
    return group.mult_tangent(g, np.zeros_like(g), e, group.algebra_to_tangent(coords, e))


def evol_differential_check(group: GroupSpec, phi: Curve, psi: Curve,
                            cfg: Optional[EvolveConfig] = None) -> DerivativeComparison:
    """evol_differential against the central difference of h -> int (phi + h psi)."""
    return param_derivative(group, affine_family(phi, psi), 0.0, cfg, check_hypothesis=False)


def _exp_quotient(group: GroupSpec, path: Curve, x: float):
    base_inv = group.inv(group.exp(path.evaluate(x)))

    def quotient(h: float) -> np.ndarray:
        plus = group.chart(group.mult(base_inv, group.exp(path.evaluate(x + h))))
        minus = group.chart(group.mult(base_inv, group.exp(path.evaluate(x - h))))
        return (plus - minus) / (2 * h)
    return quotient


def _check_path(path: Curve, x: float, steps: Sequence[float]) -> None:
    if path.order < 1:
        raise ContractViolation("the algebra path must be differentiable")
    h = max(steps)
    if x - h < path.start or x + h > path.end:
        raise ContractViolation(f"x +- {h} leaves the path interval [{path.start}, {path.end}]")


def duhamel(group: GroupSpec, path: Curve, x: float, steps: Optional[Sequence[float]] = None) -> DuhamelResult:
    """
    d/dx exp(X(x)) pulled back by dL_{exp X(x)}^-1, against the integral
    int_0^1 Ad_{exp(-s X)}(X'(x)) ds and the series (id - exp(-ad_X))/ad_X (X'(x)).

    Raises:
        OutOfChartError: If the pullback leaves the chart
    """
    steps = tuple(steps or get_settings().fd_steps)
    _check_path(path, x, steps)
    quotient = _exp_quotient(group, path, x)
    lhs, _ = richardson_extrapolate(steps, [quotient(h) for h in steps], order=2, order_step=2)
    value, slope = path.evaluate(x), path.evaluate(x, 1)

    def integrand(s: np.ndarray) -> np.ndarray:
        return np.stack([group.Ad(group.exp(-si * value), slope) for si in s])

    rhs_integral = integrate_callable(integrand, 0.0, 1.0)
    rhs_closed = dexp_factor(group, value, slope)
    p = group.algebra.default
    scale = float(p(rhs_closed))
    relative = (lambda gap: gap / scale) if scale > 0 else (lambda gap: gap)
    gaps = {
        "integral": relative(float(p(lhs - rhs_integral))),
        "closed": relative(float(p(lhs - rhs_closed))),
        "forms": float(p(rhs_integral - rhs_closed)),
    }
    return DuhamelResult(lhs, rhs_integral, rhs_closed, gaps)


def duhamel_slope(group: GroupSpec, path: Curve, x: float, steps: Sequence[float] = SLOPE_STEPS) -> float:
    """Observed order of the plain central difference against the series form."""
    _check_path(path, x, steps)
    quotient = _exp_quotient(group, path, x)
    reference = dexp_factor(group, path.evaluate(x), path.evaluate(x, 1))
    p = group.algebra.default
    return convergence_order(steps, [float(p(quotient(h) - reference)) for h in steps])
