"""
Abelian groups: (R^d, +) and the torus R^d / 2 pi Z^d.
"""
import numpy as np

from ..exceptions import OutOfChartError
from ..models.vector_spec import VectorSpec, euclidean_seminorm, max_seminorm
from .interface import GroupSpec


class AbelianGroup(GroupSpec):
    """(R^d, +) with the identity as chart and exponential map."""

    abelian = True
    nilpotent = True

    def __init__(self, d: int, name: str = None):
        seminorms = (euclidean_seminorm(d), max_seminorm())
        algebra = VectorSpec(d, seminorms, (("max", "euclidean"),))
        super().__init__(name or f"abelian({d})", algebra, submultiplicative=seminorms[0])

    def identity(self):
        return np.zeros(self.dim)

    def mult(self, g, h):
        return np.asarray(g, dtype=float) + np.asarray(h, dtype=float)

    def inv(self, g):
        return -np.asarray(g, dtype=float)

    def chart(self, g):
        return np.asarray(g, dtype=float).copy()

    def unchart(self, x):
        return np.asarray(x, dtype=float).copy()

    def exp(self, x):
        return self.unchart(x)

    def log(self, g):
        return self.chart(g)

    def Ad(self, g, x):
        return np.asarray(x, dtype=float).copy()

    def bracket(self, x, y):
        return np.zeros(self.dim)

    def ad_matrix(self, x):
        return np.zeros((self.dim, self.dim))

    def algebra_to_tangent(self, x, g):
        return np.asarray(x, dtype=float)

    def right_trivialize(self, g, tangent):
        return np.asarray(tangent, dtype=float)

    def left_trivialize(self, g, tangent):
        return np.asarray(tangent, dtype=float)

    def mult_tangent(self, g, dg, h, dh):
        return np.asarray(dg, dtype=float) + np.asarray(dh, dtype=float)

    def inv_tangent(self, g, dg):
        return -np.asarray(dg, dtype=float)


def wrap(x: np.ndarray) -> np.ndarray:
    """Representative of x modulo 2 pi in [-pi, pi]."""
    x = np.asarray(x, dtype=float)
    return x - 2 * np.pi * np.round(x / (2 * np.pi))


class TorusGroup(AbelianGroup):
    """
    R^d / 2 pi Z^d with elements stored as representatives in [-pi, pi].

    The chart inverts the canonical projection on (-pi, pi)^d, a
    neighbourhood of 0 that meets none of its translates by nonzero lattice
    vectors.
    """

    abelian = True
    nilpotent = True

    def __init__(self, d: int):
        super().__init__(d, name=f"torus({d})")
        self.chart_radius = np.pi

    def mult(self, g, h):
        return wrap(np.asarray(g, dtype=float) + np.asarray(h, dtype=float))

    def inv(self, g):
        return wrap(-np.asarray(g, dtype=float))

    def chart(self, g):
        x = wrap(g)
        if np.any(np.abs(x) >= np.pi):
            raise OutOfChartError(f"{self.name}: representative {x} not inside (-pi, pi)^d")
        return x

    def unchart(self, x):
        x = np.asarray(x, dtype=float)
        if np.any(np.abs(x) >= np.pi):
            raise OutOfChartError(f"{self.name}: chart coordinates {x} not inside (-pi, pi)^d")
        return x.copy()

    def exp(self, x):
        return wrap(x)

    def log(self, g):
        return self.chart(g)
