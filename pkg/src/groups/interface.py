"""
Interface for concrete Lie groups.

A GroupSpec bundles the identity, multiplication, inversion, a chart Xi
around the identity with its inverse, the adjoint action, the bracket and
the exponential map. Algebra elements are coordinate vectors in R^d with
respect to a fixed basis; group elements are arrays (matrices or
coordinate tuples) owned by the group.
"""
import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.linalg import expm

from ..exceptions import ContractViolation, OutOfChartError
from ..models.vector_spec import Seminorm, VectorSpec

logger = logging.getLogger(__name__)


class GroupSpec(ABC):
    """
    Abstract Lie group with a chart around the identity.

    Attributes:
        name: Display name, e.g. "so3" or "gl(2)"
        algebra: Coordinate space of the Lie algebra with its seminorms
        abelian: True if the bracket vanishes identically
        nilpotent: True if ad-power series terminate
        submultiplicative: Seminorm w with w([X, Y]) <= w(X) w(Y), if available
        chart_radius: Radius of the chart image in the default seminorm
    """

    abelian: bool = False
    nilpotent: bool = False

    def __init__(self, name: str, algebra: VectorSpec, submultiplicative: Optional[Seminorm] = None,
                 chart_radius: float = np.inf):
        self.name = name
        self.algebra = algebra
        self.submultiplicative = submultiplicative
        self.chart_radius = chart_radius

    @property
    def dim(self) -> int:
        return self.algebra.dimension

    # Group structure

    @abstractmethod
    def identity(self) -> np.ndarray:
        """The neutral element e."""

    @abstractmethod
    def mult(self, g: np.ndarray, h: np.ndarray) -> np.ndarray:
        """Product g h."""

    @abstractmethod
    def inv(self, g: np.ndarray) -> np.ndarray:
        """Inverse g^-1; raises InversionError for singular elements."""

    @abstractmethod
    def chart(self, g: np.ndarray) -> np.ndarray:
        """Xi(g) in algebra coordinates; raises OutOfChartError outside the chart domain."""

    @abstractmethod
    def unchart(self, x: np.ndarray) -> np.ndarray:
        """Xi^-1(x); raises OutOfChartError outside the chart image."""

    @abstractmethod
    def exp(self, x: np.ndarray) -> np.ndarray:
        """Exponential map."""

    @abstractmethod
    def log(self, g: np.ndarray) -> np.ndarray:
        """Inverse of exp near e; raises OutOfChartError where undefined."""

    @abstractmethod
    def Ad(self, g: np.ndarray, x: np.ndarray) -> np.ndarray:  # pylint: disable=invalid-name
        """Adjoint action Ad_g(X)."""

    @abstractmethod
    def bracket(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """Lie bracket [X, Y]."""

    # Tangent vectors, expressed in the ambient coordinates of elements

    @abstractmethod
    def algebra_to_tangent(self, x: np.ndarray, g: np.ndarray) -> np.ndarray:
        """dR_g(X): the tangent vector at g obtained by right translation."""

    @abstractmethod
    def right_trivialize(self, g: np.ndarray, tangent: np.ndarray) -> np.ndarray:
        """dR_{g^-1}(v) for a tangent vector v at g, in algebra coordinates."""

    @abstractmethod
    def left_trivialize(self, g: np.ndarray, tangent: np.ndarray) -> np.ndarray:
        """dL_{g^-1}(v) for a tangent vector v at g, in algebra coordinates."""

    @abstractmethod
    def mult_tangent(self, g, dg, h, dh) -> np.ndarray:
        """Derivative of the product g h along tangents dg, dh."""

    @abstractmethod
    def inv_tangent(self, g, dg) -> np.ndarray:
        """Derivative of g^-1 along the tangent dg."""

    # Derived operations

    def basis(self) -> np.ndarray:
        return np.eye(self.dim)

    def structure_constants(self) -> np.ndarray:
        """C[i, j] = [e_i, e_j] in coordinates, shape (d, d, d)."""
        e = self.basis()
        return np.array([[self.bracket(e[i], e[j]) for j in range(self.dim)] for i in range(self.dim)])

    def ad_matrix(self, x: np.ndarray) -> np.ndarray:
        """Matrix of ad_X = [X, .] whose j-th column is [X, e_j]."""
        e = self.basis()
        return np.stack([self.bracket(x, e[j]) for j in range(self.dim)], axis=1)

    def Ad_matrix(self, g: np.ndarray) -> np.ndarray:  # pylint: disable=invalid-name
        """Matrix of Ad_g."""
        e = self.basis()
        return np.stack([self.Ad(g, e[j]) for j in range(self.dim)], axis=1)

    def dexp_right(self, x: np.ndarray, v: np.ndarray) -> np.ndarray:
        """
        Right-trivialized derivative of exp: (e^{ad_X} - 1)/ad_X (V).

        Uses expm of the block matrix [[ad_X, I], [0, 0]], whose upper
        right block is phi_1(ad_X).
        """
        d = self.dim
        block = np.zeros((2 * d, 2 * d))
        block[:d, :d] = self.ad_matrix(x)
        block[:d, d:] = np.eye(d)
        return expm(block)[:d, d:] @ np.asarray(v, dtype=float)

    def in_chart(self, g: np.ndarray) -> bool:
        try:
            self.chart(g)
        except OutOfChartError:
            return False
        return True

    def distance(self, g: np.ndarray, h: np.ndarray, seminorm: Optional[Seminorm] = None) -> float:
        """
        Chart distance p(Xi(g^-1 h)).

        Falls back to the raw coordinate distance, with a warning, when
        g^-1 h leaves the chart domain.
        """
        p = seminorm or self.algebra.default
        try:
            return float(p(self.chart(self.mult(self.inv(g), h))))
        except OutOfChartError:
            logger.warning("%s: g^-1 h outside the chart, using raw coordinate distance", self.name)
            return float(np.max(np.abs(np.asarray(g) - np.asarray(h))))

    def line_log_derivative(self, y: np.ndarray, sigma: np.ndarray, s: int = 0) -> np.ndarray:
        """
        s-th sigma-derivative of Der(sigma -> Xi^-1(sigma Y)) at each sigma.

        For charts that agree with log near e the curve sigma -> exp(sigma Y)
        has constant derivative Y.
        """
        sigma = np.atleast_1d(np.asarray(sigma, dtype=float))
        if s == 0:
            return np.tile(np.asarray(y, dtype=float), (sigma.size, 1))
        return np.zeros((sigma.size, self.dim))

    def conj(self, g: np.ndarray, h: np.ndarray) -> np.ndarray:
        """g h g^-1."""
        return self.mult(self.mult(g, h), self.inv(g))

    def element(self, coords) -> "GroupElement":
        return GroupElement(self, np.asarray(coords))

    def validate_element(self, g: np.ndarray) -> bool:
        """Coordinates finite, and non-singular for matrix groups."""
        return bool(np.all(np.isfinite(g)))

    def check_algebra(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        if x.shape != (self.dim,):
            raise ContractViolation(f"{self.name}: algebra element must have shape ({self.dim},), got {x.shape}")
        return x

    def __repr__(self) -> str:
        return f"{type(self).__name__}(name={self.name!r}, dim={self.dim})"


@dataclass(frozen=True)
class GroupElement:
    """
    An element together with its group.

    Attributes:
        group: Owning GroupSpec
        coords: Matrix entries or coordinate tuple
    """

    group: GroupSpec
    coords: np.ndarray

    def validate(self) -> bool:
        return self.group.validate_element(self.coords)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        if other.group is not self.group:
            raise ContractViolation("cannot multiply elements of different groups")
        return GroupElement(self.group, self.group.mult(self.coords, other.coords))

    def inverse(self) -> "GroupElement":
        return GroupElement(self.group, self.group.inv(self.coords))

    def chart(self) -> np.ndarray:
        return self.group.chart(self.coords)

    def __repr__(self) -> str:
        return f"GroupElement({self.group.name}, {np.array2string(np.asarray(self.coords), precision=4)})"
