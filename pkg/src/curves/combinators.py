"""
Curves built from other curves: restriction, reversal, linear combinations,
derivatives, reparametrizations and splines through sampled data.
"""
from typing import Sequence

import numpy as np
from scipy.interpolate import CubicSpline, PchipInterpolator

from ..exceptions import ContractViolation
from .interface import Curve
from .jets import compose_derivatives, product_derivatives


class RestrictedCurve(Curve):
    """c restricted to [a, b], a subinterval of its domain."""

    def __init__(self, curve: Curve, a: float, b: float):
        tol = 1e-12 * max(1.0, abs(curve.start), abs(curve.end))
        if a < curve.start - tol or b > curve.end + tol:
            raise ContractViolation(f"[{a}, {b}] is not inside [{curve.start}, {curve.end}]")
        super().__init__(a, b, curve.dim, curve.order)
        self.curve = curve

    def _evaluate(self, t: np.ndarray, s: int) -> np.ndarray:
        return self.curve.evaluate(t, s)


class ReversedCurve(Curve):
    """
    t -> sign * c(r + r' - t).

    With ``negate=True`` (the default) this is the reversed integrand whose
    product integral is the inverse of the original one.
    """

    def __init__(self, curve: Curve, negate: bool = True):
        super().__init__(curve.start, curve.end, curve.dim, curve.order)
        self.curve = curve
        self.negate = negate

    def _evaluate(self, t: np.ndarray, s: int) -> np.ndarray:
        sign = (-1.0) ** s * (-1.0 if self.negate else 1.0)
        return sign * self.curve.evaluate(self.start + self.end - t, s)


class LinearCombination(Curve):
    """sum_i w_i c_i over curves sharing interval and dimension."""

    def __init__(self, curves: Sequence[Curve], weights: Sequence[float]):
        curves = list(curves)
        if not curves or len(curves) != len(weights):
            raise ContractViolation("linear combination needs matching non-empty curves and weights")
        first = curves[0]
        for c in curves[1:]:
            if c.dim != first.dim or not np.allclose(c.interval, first.interval, rtol=0, atol=1e-12):
                raise ContractViolation(f"cannot combine {first!r} with {c!r}")
        super().__init__(first.start, first.end, first.dim, min(c.order for c in curves))
        self.curves = curves
        self.weights = [float(w) for w in weights]

    def _evaluate(self, t: np.ndarray, s: int) -> np.ndarray:
        return sum(w * c.evaluate(t, s) for w, c in zip(self.weights, self.curves))


class DerivativeCurve(Curve):
    """The s-th derivative c^(s) as a curve of order k - s."""

    def __init__(self, curve: Curve, s: int = 1):
        if s < 0 or s > curve.order:
            raise ContractViolation(f"cannot differentiate {s} times a curve of order {curve.order}")
        super().__init__(curve.start, curve.end, curve.dim, curve.order - s)
        self.curve = curve
        self.shift = s

    def _evaluate(self, t: np.ndarray, s: int) -> np.ndarray:
        return self.curve.evaluate(t, s + self.shift)


class ReparametrizedCurve(Curve):
    """
    t -> rho'(t) * c(rho(t)) (``weighted=True``) or c(rho(t)).

    rho is a scalar Curve whose values stay inside the domain of c. Higher
    derivatives are obtained from Taylor jets of rho and c.
    """

    def __init__(self, curve: Curve, rho: Curve, weighted: bool = True):
        if rho.dim != 1:
            raise ContractViolation("reparametrization must be scalar")
        order = min(curve.order, rho.order - 1 if weighted else rho.order)
        if order < 0:
            raise ContractViolation("weighted reparametrization needs a differentiable rho")
        super().__init__(rho.start, rho.end, curve.dim, order)
        self.curve = curve
        self.rho = rho
        self.weighted = weighted

    def _inner(self, t: np.ndarray) -> np.ndarray:
        return np.clip(self.rho.evaluate(t, 0)[:, 0], self.curve.start, self.curve.end)

    def _evaluate(self, t: np.ndarray, s: int) -> np.ndarray:
        inner = self._inner(t)
        if s == 0:
            values = self.curve.evaluate(inner, 0)
            return self.rho.evaluate(t, 1) * values if self.weighted else values

        top = s + 1 if self.weighted else s
        rho_jets = np.stack([self.rho.evaluate(t, j)[:, 0] for j in range(top + 1)])
        rho_jets[0] = inner
        outer = np.stack([self.curve.evaluate(inner, k) for k in range(s + 1)])
        out = np.empty((t.size, self.dim))
        for i in range(t.size):
            composed = compose_derivatives(outer[:, i, :], rho_jets[: s + 1, i])
            if self.weighted:
                composed = product_derivatives(rho_jets[1: s + 2, i], composed)
            out[i] = composed[s]
        return out


class SplineCurve(Curve):
    """
    Interpolating spline through sampled values.

    ``kind="cubic"`` uses a not-a-knot cubic spline (order 3); ``kind="pchip"``
    a monotonicity-preserving Hermite interpolant (order 1).
    """

    def __init__(self, nodes, values, kind: str = "cubic"):
        nodes = np.asarray(nodes, dtype=float)
        values = np.asarray(values, dtype=float)
        if values.ndim == 1:
            values = values[:, None]
        if kind == "cubic":
            spline, order = CubicSpline(nodes, values, axis=0), 3
        elif kind == "pchip":
            spline, order = PchipInterpolator(nodes, values, axis=0), 1
        else:
            raise ContractViolation(f"unknown spline kind '{kind}'")
        super().__init__(nodes[0], nodes[-1], values.shape[1], order)
        self.spline = spline
        self.kind = kind

    def _evaluate(self, t: np.ndarray, s: int) -> np.ndarray:
        return self.spline(t, s)
