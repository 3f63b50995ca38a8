"""
Interface for product-integral stepping schemes.
"""
from abc import ABC, abstractmethod
from typing import Callable

import numpy as np

LinearRhs = Callable[[float, np.ndarray], np.ndarray]


class IEvolutionScheme(ABC):
    """
    One-step scheme for mu' = dR_mu(phi), mu(r) = e.

    Every step has the right-product form mu_{k+1} = exp(h phi(tau_k)) mu_k:
    the new factor multiplies on the left, matching Der(mu) = mu' mu^-1.
    """

    name: str = ""
    order: int = 0

    @abstractmethod
    def node(self, t: np.ndarray, h: float) -> np.ndarray:
        """Times tau_k at which phi is sampled for steps starting at t_k with length h."""

    @abstractmethod
    def linear_step(self, rhs: LinearRhs, t: float, y: np.ndarray, h: float) -> np.ndarray:
        """
        One step of the vector-space counterpart for y' = rhs(t, y).

        Used for linear transport equations solved independently of the
        group evolution.
        """
