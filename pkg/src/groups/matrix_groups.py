"""
Matrix Lie groups: gl(n), unit_group(n), so3, su2 and heisenberg3.

Elements are n x n arrays; algebra coordinates refer to a fixed basis of
matrices E_1, ..., E_d, with hat(x) = sum x_i E_i and vee its left inverse.
"""
import logging
from typing import Optional, Sequence

import numpy as np
from scipy.linalg import expm, logm

from ..exceptions import InversionError, OutOfChartError
from ..models.vector_spec import Seminorm, VectorSpec, euclidean_seminorm, max_seminorm
from .interface import GroupSpec

logger = logging.getLogger(__name__)

DET_FLOOR = 1e-12


def operator_seminorm(basis: np.ndarray, name: str = "operator") -> Seminorm:
    """p(x) = spectral norm of hat(x)."""
    def evaluate(x):
        x = np.asarray(x, dtype=float)
        return np.linalg.norm(np.tensordot(x, basis, axes=(-1, 0)), ord=2, axis=(-2, -1))
    return Seminorm(name=name, evaluate=evaluate)


class MatrixGroup(GroupSpec):
    """
    Closed subgroup of GL(n, R) or GL(n, C) given by a basis of its algebra.

    The default chart is the principal matrix logarithm, guarded to
    ||g - I||_op < chart_guard.
    """

    def __init__(self, name: str, basis: np.ndarray, seminorms: Sequence[Seminorm],
                 submultiplicative: Optional[Seminorm] = None, chart_guard: float = 0.5,
                 order=(("operator", "euclidean"),)):
        self.matrices = np.asarray(basis)
        self.size = self.matrices.shape[-1]
        self.complex = np.iscomplexobj(self.matrices)
        d = self.matrices.shape[0]
        stacked = np.concatenate([self.matrices.real.reshape(d, -1), self.matrices.imag.reshape(d, -1)], axis=1)
        self._vee = np.linalg.pinv(stacked.T)
        self.chart_guard = chart_guard
        algebra = VectorSpec(d, tuple(seminorms), tuple(order))
        super().__init__(name, algebra, submultiplicative, chart_radius=chart_guard)
        self._constants = np.array([[self.vee(a @ b - b @ a) for b in self.matrices] for a in self.matrices])

    # Coordinates

    def hat(self, x: np.ndarray) -> np.ndarray:
        return np.tensordot(np.asarray(x, dtype=float), self.matrices, axes=(-1, 0))

    def vee(self, a: np.ndarray) -> np.ndarray:
        a = np.asarray(a)
        flat = np.concatenate([a.real.reshape(-1), a.imag.reshape(-1)]) if self.complex \
            else np.concatenate([np.real(a).reshape(-1), np.zeros(a.size)])
        return self._vee @ flat

    def structure_constants(self) -> np.ndarray:
        return self._constants

    def bracket(self, x, y):
        return np.einsum("i,j,ijk->k", x, y, self._constants)

    def ad_matrix(self, x):
        return np.einsum("i,ijk->kj", x, self._constants)

    # Group structure

    def identity(self):
        return np.eye(self.size, dtype=complex if self.complex else float)

    def mult(self, g, h):
        return g @ h

    def inv(self, g):
        det = np.linalg.det(g)
        if not np.isfinite(det) or abs(det) <= DET_FLOOR:
            raise InversionError(f"{self.name}: singular element (|det| = {abs(det):.3e})")
        return np.linalg.inv(g)

    def exp(self, x):
        return expm(self.hat(x))

    def log(self, g):
        gap = np.linalg.norm(g - self.identity(), ord=2)
        if gap >= self.chart_guard:
            raise OutOfChartError(f"{self.name}: ||g - I|| = {gap:.3e} outside chart radius {self.chart_guard}")
        return self.vee(logm(g))

    def chart(self, g):
        return self.log(g)

    def unchart(self, x):
        return self.exp(x)

    def Ad(self, g, x):
        return self.vee(g @ self.hat(x) @ self.inv(g))

    def algebra_to_tangent(self, x, g):
        return self.hat(x) @ g

    def right_trivialize(self, g, tangent):
        return self.vee(tangent @ self.inv(g))

    def left_trivialize(self, g, tangent):
        return self.vee(self.inv(g) @ tangent)

    def mult_tangent(self, g, dg, h, dh):
        return dg @ h + g @ dh

    def inv_tangent(self, g, dg):
        g_inv = self.inv(g)
        return -g_inv @ dg @ g_inv

    def validate_element(self, g):
        g = np.asarray(g)
        return bool(g.shape == (self.size, self.size) and np.all(np.isfinite(g))
                    and abs(np.linalg.det(g)) > DET_FLOOR)


def _elementary_basis(n: int) -> np.ndarray:
    basis = np.zeros((n * n, n, n))
    for k in range(n * n):
        basis[k, k // n, k % n] = 1.0
    return basis


def _standard_seminorms(basis: np.ndarray):
    d = basis.shape[0]
    return [euclidean_seminorm(d), operator_seminorm(basis), max_seminorm()]


class GeneralLinearGroup(MatrixGroup):
    """GL(n, R) with the elementary basis E_ij (row-major)."""

    def __init__(self, n: int, name: Optional[str] = None):
        basis = _elementary_basis(n)
        seminorms = _standard_seminorms(basis)
        super().__init__(name or f"gl({n})", basis, seminorms,
                         submultiplicative=seminorms[1].scaled(2.0), chart_guard=0.5)


class UnitGroup(GeneralLinearGroup):
    """
    Unit group of the Banach algebra of n x n matrices.

    The chart is a -> a - 1 on ||a - 1||_op < 1; exp and log are the matrix
    ones and are independent of the chart.
    """

    def __init__(self, n: int):
        super().__init__(n, name=f"unit_group({n})")
        self.chart_guard = 1.0
        self.chart_radius = 1.0

    def chart(self, g):
        gap = np.linalg.norm(g - self.identity(), ord=2)
        if gap >= 1.0:
            raise OutOfChartError(f"{self.name}: ||a - 1|| = {gap:.3e} is not < 1")
        return self.vee(g - self.identity())

    def unchart(self, x):
        a = self.hat(x)
        if np.linalg.norm(a, ord=2) >= 1.0:
            raise OutOfChartError(f"{self.name}: ||X|| >= 1 is outside the chart image")
        return self.identity() + a

    def log(self, g):
        gap = np.linalg.norm(g - self.identity(), ord=2)
        if gap >= 1.0:
            raise OutOfChartError(f"{self.name}: ||a - 1|| = {gap:.3e}, logarithm series not available")
        return self.vee(np.real(logm(g)))

    def operator_norm(self, a: np.ndarray) -> float:
        return float(np.linalg.norm(a, ord=2))

    def line_log_derivative(self, y, sigma, s=0):
        # Der(1 + sigma Y) = Y (1 + sigma Y)^-1, whose k-th derivative is (-1)^k k! (Y (1 + sigma Y)^-1)^(k+1)
        sigma = np.atleast_1d(np.asarray(sigma, dtype=float))
        y_mat = self.hat(y)
        out = np.empty((sigma.size, self.dim))
        for i, sg in enumerate(sigma):
            z = y_mat @ np.linalg.inv(self.identity() + sg * y_mat)
            out[i] = self.vee((-1.0) ** s * np.prod(np.arange(1, s + 1)) * np.linalg.matrix_power(z, s + 1))
        return out


SO3_BASIS = np.array([
    [[0.0, 0.0, 0.0], [0.0, 0.0, -1.0], [0.0, 1.0, 0.0]],
    [[0.0, 0.0, 1.0], [0.0, 0.0, 0.0], [-1.0, 0.0, 0.0]],
    [[0.0, -1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 0.0]],
])

# Rotation angles at least this close to pi are outside the chart.
ANGLE_MARGIN = 1e-6


class SpecialOrthogonal3(MatrixGroup):
    """
    SO(3) with the standard hat basis; [e_i, e_j] is the cross product.

    exp is the Rodrigues formula and the chart the principal logarithm,
    defined for rotation angles below pi.
    """

    def __init__(self):
        seminorms = _standard_seminorms(SO3_BASIS)
        super().__init__("so3", SO3_BASIS, seminorms, submultiplicative=seminorms[0],
                         chart_guard=np.pi - ANGLE_MARGIN)

    def exp(self, x):
        x = np.asarray(x, dtype=float)
        theta = np.linalg.norm(x)
        k = self.hat(x)
        return np.eye(3) + np.sinc(theta / np.pi) * k + 0.5 * np.sinc(theta / (2 * np.pi)) ** 2 * (k @ k)

    def log(self, g):
        v = self.vee(0.5 * (g - g.T))
        theta = np.arctan2(np.linalg.norm(v), 0.5 * (np.trace(g) - 1.0))
        if theta >= np.pi - ANGLE_MARGIN:
            raise OutOfChartError(f"so3: rotation angle {theta:.6f} too close to pi for the principal logarithm")
        return v / np.sinc(theta / np.pi)

    def inv(self, g):
        return g.T if np.allclose(g @ g.T, np.eye(3), atol=1e-12) else super().inv(g)

    def Ad(self, g, x):
        return g @ np.asarray(x, dtype=float)

    def rotation_angle(self, g) -> float:
        v = self.vee(0.5 * (g - g.T))
        return float(np.arctan2(np.linalg.norm(v), 0.5 * (np.trace(g) - 1.0)))


PAULI = np.array([
    [[0, 1], [1, 0]],
    [[0, -1j], [1j, 0]],
    [[1, 0], [0, -1]],
], dtype=complex)

SU2_BASIS = -0.5j * PAULI


class SpecialUnitary2(MatrixGroup):
    """
    SU(2) with basis e_k = -(i/2) sigma_k.

    The structure constants coincide with those of so3, so the adjoint
    double cover SU(2) -> SO(3) has the identity as differential.
    """

    def __init__(self):
        seminorms = _standard_seminorms(SU2_BASIS)
        super().__init__("su2", SU2_BASIS, seminorms, submultiplicative=seminorms[0],
                         chart_guard=np.pi - ANGLE_MARGIN)

    def exp(self, x):
        x = np.asarray(x, dtype=float)
        theta = np.linalg.norm(x)
        return np.cos(theta / 2) * np.eye(2, dtype=complex) + np.sinc(theta / (2 * np.pi)) * self.hat(x)

    def log(self, g):
        v = self.vee(0.5 * (g - g.conj().T))
        half = np.arctan2(0.5 * np.linalg.norm(v), 0.5 * np.real(np.trace(g)))
        if 2 * half >= np.pi - ANGLE_MARGIN:
            raise OutOfChartError(f"su2: rotation angle {2 * half:.6f} too close to pi for the chart")
        return v / np.sinc(half / np.pi)

    def inv(self, g):
        return g.conj().T if np.allclose(g @ g.conj().T, np.eye(2), atol=1e-12) else super().inv(g)


HEISENBERG_BASIS = np.zeros((3, 3, 3))
HEISENBERG_BASIS[0, 0, 1] = 1.0
HEISENBERG_BASIS[1, 1, 2] = 1.0
HEISENBERG_BASIS[2, 0, 2] = 1.0


class Heisenberg3(MatrixGroup):
    """
    Upper unitriangular 3 x 3 matrices; e1 = E12, e2 = E23, e3 = E13, [e1, e2] = e3.

    exp and log are exact polynomials and the chart is global.
    """

    nilpotent = True

    def __init__(self):
        seminorms = _standard_seminorms(HEISENBERG_BASIS)
        super().__init__("heisenberg3", HEISENBERG_BASIS, seminorms, submultiplicative=seminorms[0],
                         chart_guard=np.inf)

    def exp(self, x):
        a = self.hat(x)
        return np.eye(3) + a + 0.5 * (a @ a)

    def log(self, g):
        n = g - np.eye(3)
        return self.vee(n - 0.5 * (n @ n))

    def inv(self, g):
        n = g - np.eye(3)
        return np.eye(3) - n + n @ n
