"""
Lie-Euler and exponential midpoint schemes.
"""
import numpy as np

from ..exceptions import ContractViolation
from .interface import IEvolutionScheme, LinearRhs


class LieEuler(IEvolutionScheme):
    """mu_{k+1} = exp(h phi(t_k)) mu_k, order 1."""

    name = "lie_euler"
    order = 1

    def node(self, t, h):
        return np.asarray(t, dtype=float)

    def linear_step(self, rhs: LinearRhs, t, y, h):
        return y + h * rhs(t, y)


class ExponentialMidpoint(IEvolutionScheme):
    """mu_{k+1} = exp(h phi(t_k + h/2)) mu_k, order 2."""

    name = "midpoint"
    order = 2

    def node(self, t, h):
        return np.asarray(t, dtype=float) + 0.5 * h

    def linear_step(self, rhs: LinearRhs, t, y, h):
        half = y + 0.5 * h * rhs(t, y)
        return y + h * rhs(t + 0.5 * h, half)


_SCHEMES = {scheme.name: scheme for scheme in (LieEuler(), ExponentialMidpoint())}


def get_scheme(name: str) -> IEvolutionScheme:
    """Scheme instance by name."""
    try:
        return _SCHEMES[name]
    except KeyError:
        raise ContractViolation(f"unknown scheme {name!r}; available: {sorted(_SCHEMES)}") from None
