"""
Adjoint transport along evolutions (Omori's lemma in both directions).
"""
import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..curves import Curve, SplineCurve
from ..evolution import EvolutionResult, evolve, get_scheme
from ..groups import GroupSpec
from ..models.evolve_config import EvolveConfig

logger = logging.getLogger(__name__)


@dataclass
class TransportResult:
    """
    Solution of alpha' = [phi, alpha], alpha(r) = Y on a grid.

    Attributes:
        times: Grid
        values: alpha at the grid nodes, shape (n+1, d)
        residual: sup_k p(alpha_k - Ad_{mu_k} Y) against the group evolution
        estimate: Richardson estimate of the transport plus that of the evolution
    """

    times: np.ndarray
    values: np.ndarray
    residual: float
    estimate: float

    @property
    def curve(self) -> Curve:
        return SplineCurve(self.times, self.values, kind="cubic")


def _solve(group: GroupSpec, phi: Curve, y: np.ndarray, scheme_name: str, times: np.ndarray) -> np.ndarray:
    scheme = get_scheme(scheme_name)
    rhs = lambda t, a: group.bracket(phi.evaluate(t), a)
    values = np.empty((times.size, group.dim))
    values[0] = y
    for k in range(times.size - 1):
        values[k + 1] = scheme.linear_step(rhs, times[k], values[k], times[k + 1] - times[k])
    return values


def _halved(times: np.ndarray) -> np.ndarray:
    fine = np.empty(2 * times.size - 1)
    fine[::2] = times
    fine[1::2] = 0.5 * (times[:-1] + times[1:])
    return fine


def omori_transport(group: GroupSpec, phi: Curve, y, cfg: Optional[EvolveConfig] = None) -> TransportResult:
    """
    Integrate alpha' = [phi, alpha] with the linear counterpart of the scheme
    and compare with Ad_{int^t phi}(Y).

    The ODE is solved on the grid of the group evolution, so tolerance-only
    configs and piecewise integrands use the steps chosen by evolve.
    """
    cfg = cfg or EvolveConfig()
    y = group.check_algebra(y)
    mu = evolve(group, phi, cfg)
    values = _solve(group, phi, y, cfg.scheme, mu.times)
    order = get_scheme(cfg.scheme).order
    fine = _solve(group, phi, y, cfg.scheme, _halved(mu.times))
    p = group.algebra.default
    own = float(np.max(p(values - fine[::2]))) * 2.0 ** order / (2.0 ** order - 1.0)
    transported = np.stack([group.Ad(g, y) for g in mu.elements])
    residual = float(np.max(p(values - transported)))
    logger.debug("Omori transport on %s: residual %.3e, estimates %.3e + %.3e",
                 group.name, residual, own, mu.estimate)
    return TransportResult(mu.times, values, residual, own + mu.estimate * max(1.0, float(p(y))))


def omori_converse_residual(group: GroupSpec, mu: EvolutionResult, y) -> float:
    """
    sup_k p(alpha'(t_k) - [phi(t_k), alpha(t_k)]) for alpha = Ad_mu(Y) along a computed evolution.

    alpha' comes from differences on each uniform segment: 4th-order central
    inside, second order at the segment ends.
    """
    y = group.check_algebra(y)
    alpha = np.stack([group.Ad(g, y) for g in mu.elements])
    derivative = np.empty_like(alpha)
    for first, last in mu.segments:
        piece = alpha[first:last + 1]
        local = np.gradient(piece, mu.times[first:last + 1], axis=0, edge_order=1 if piece.shape[0] < 3 else 2)
        if piece.shape[0] >= 5:
            h = (mu.times[last] - mu.times[first]) / (last - first)
            local[2:-2] = (piece[:-4] - 8 * piece[1:-3] + 8 * piece[3:-1] - piece[4:]) / (12 * h)
        derivative[first:last + 1] = local
    phi = mu.phi.evaluate(mu.times)
    expected = np.stack([group.bracket(f, a) for f, a in zip(phi, alpha)])
    return float(np.max(group.algebra.default(derivative - expected)))
