"""
Approximation machinery: polygons, mollifier convolution and iterated
integration, chained into C^p approximations of C^p curves.
"""
import logging
from math import factorial
from typing import Sequence

import numpy as np
from scipy.integrate import quad

from ..curves import SMOOTH, Curve, PiecewiseCurve, PolynomialCurve
from ..curves.jets import exp_derivatives
from ..exceptions import ContractViolation
from .integration import integrate_callable

logger = logging.getLogger(__name__)

GAUSS_NODES = 64


def polygon_approx(c: Curve, n: int) -> PiecewiseCurve:
    """Piecewise-linear interpolant of c on n uniform segments."""
    if n < 1:
        raise ContractViolation(f"polygon needs at least one segment, got {n}")
    nodes = np.linspace(c.start, c.end, n + 1)
    values = c.evaluate(nodes)
    segments = []
    for k in range(n):
        slope = (values[k + 1] - values[k]) / (nodes[k + 1] - nodes[k])
        segments.append(PolynomialCurve(np.stack([values[k], slope]), nodes[k], nodes[k + 1], origin=nodes[k]))
    return PiecewiseCurve(nodes, segments)


def _bump_exponent_derivatives(x: np.ndarray, m: int) -> np.ndarray:
    """Derivatives of f(x) = -1/(1 - x^2) = -(1/(1-x) + 1/(1+x))/2 for |x| < 1."""
    out = np.empty((m + 1, x.size))
    for j in range(m + 1):
        out[j] = -0.5 * factorial(j) * (1.0 / (1.0 - x) ** (j + 1) + (-1.0) ** j / (1.0 + x) ** (j + 1))
    return out


class Mollifier:
    """
    rho_n(u) = n * c0 * exp(-1/(1 - (n u)^2)) on |u| < 1/n.

    Attributes:
        n: Inverse support radius
        c0: Normalization making the integral 1
    """

    def __init__(self, n: int):
        if n < 1:
            raise ContractViolation(f"mollifier index must be positive, got {n}")
        self.n = int(n)
        mass, _ = quad(lambda x: np.exp(-1.0 / (1.0 - x * x)), -1.0, 1.0, epsabs=1e-15, epsrel=1e-14)
        self.c0 = 1.0 / mass

    def base(self, x: np.ndarray, p: int = 0) -> np.ndarray:
        """p-th derivative of c0 * exp(-1/(1-x^2)), zero outside (-1, 1)."""
        x = np.asarray(x, dtype=float)
        inside = np.abs(x) < 1.0
        out = np.zeros_like(x)
        if np.any(inside):
            derivs = exp_derivatives(_bump_exponent_derivatives(x[inside], p))
            out[inside] = self.c0 * derivs[p]
        return out

    def __call__(self, u: np.ndarray, p: int = 0) -> np.ndarray:
        """rho_n^(p)(u) = n^(p+1) * base^(p)(n u)."""
        return self.n ** (p + 1) * self.base(self.n * np.asarray(u, dtype=float), p)


class ConvolvedCurve(Curve):
    """
    t -> int rho_n(t - s) c(s) ds with c extended constantly outside its interval.

    Derivatives fall on the kernel. The window is split at the breakpoints
    and interval ends of c and each piece is integrated by Gauss-Legendre.
    """

    def __init__(self, curve: Curve, n: int):
        super().__init__(curve.start, curve.end, curve.dim, SMOOTH)
        self.curve = curve
        self.mollifier = Mollifier(n)
        kinks = [curve.start, curve.end]
        if isinstance(curve, PiecewiseCurve):
            kinks = list(curve.breakpoints)
        self.kinks = np.asarray(kinks, dtype=float)
        self.nodes, self.weights = np.polynomial.legendre.leggauss(GAUSS_NODES)

    def _extended(self, s: np.ndarray) -> np.ndarray:
        return self.curve.evaluate(np.clip(s, self.curve.start, self.curve.end))

    def _evaluate(self, t: np.ndarray, s: int) -> np.ndarray:
        n = self.mollifier.n
        out = np.empty((t.size, self.dim))
        for i, ti in enumerate(t):
            # u = n (t - s) runs over (-1, 1); kinks of c become cuts in u
            cuts = n * (ti - self.kinks)
            cuts = np.unique(np.concatenate([[-1.0, 1.0], cuts[np.abs(cuts) < 1.0]]))
            lo, hi = cuts[:-1], cuts[1:]
            half = 0.5 * (hi - lo)
            u = (0.5 * (hi + lo))[:, None] + half[:, None] * self.nodes[None, :]
            w = (half[:, None] * self.weights[None, :]).ravel()
            u = u.ravel()
            kernel = self.mollifier.base(u, s) * w
            out[i] = n ** s * kernel @ self._extended(ti - u / n)
        return out


def convolve(c: Curve, n: int) -> ConvolvedCurve:
    """Smooth c by convolution with the mollifier rho_n."""
    return ConvolvedCurve(c, n)


class IteratedIntegral(Curve):
    """
    I[p](X_1, ..., X_p, phi)(t) = sum_{j<p} X_{p-j} (t-r)^j / j! + int_r^t (t-u)^(p-1)/(p-1)! phi(u) du.

    The s-th derivative equals I[p-s](X_1, ..., X_{p-s}, phi) for s < p,
    phi for s = p and phi^(s-p) beyond.
    """

    def __init__(self, initial: Sequence[np.ndarray], curve: Curve):
        if len(initial) < 1:
            raise ContractViolation("iterated integration needs p >= 1 initial values")
        initial = [np.asarray(x, dtype=float).reshape(curve.dim) for x in initial]
        order = SMOOTH if curve.order >= SMOOTH else curve.order + len(initial)
        super().__init__(curve.start, curve.end, curve.dim, order)
        self.initial = initial
        self.curve = curve

    @property
    def p(self) -> int:
        return len(self.initial)

    def _evaluate(self, t: np.ndarray, s: int) -> np.ndarray:
        p = self.p
        if s >= p:
            return self.curve.evaluate(t, s - p)
        q = p - s
        xs = self.initial[:q]
        tau = t - self.start
        out = np.zeros((t.size, self.dim))
        for j in range(q):
            out += np.outer(tau ** j / factorial(j), xs[q - 1 - j])
        for i, ti in enumerate(t):
            if ti <= self.start:
                continue
            kernel = (lambda u, ti=ti: ((ti - u) ** (q - 1) / factorial(q - 1))[:, None]
                      * self.curve.evaluate(np.clip(u, self.start, self.end)))
            out[i] += self._integrate(kernel, ti)
        return out

    def _integrate(self, kernel, ti: float) -> np.ndarray:
        if isinstance(self.curve, PiecewiseCurve):
            cuts = [self.start] + [b for b in self.curve.breakpoints if self.start < b < ti] + [ti]
            return sum(integrate_callable(kernel, a, b) for a, b in zip(cuts[:-1], cuts[1:]))
        return integrate_callable(kernel, self.start, ti)


def iterated_integrate(initial: Sequence[np.ndarray], c: Curve) -> IteratedIntegral:
    """Build I[p](X_1, ..., X_p, c) with p = len(initial)."""
    return IteratedIntegral(initial, c)


def initial_jet(c: Curve, p: int) -> list:
    """[c^(p-1)(r), ..., c(r)], the initial values reconstructing c from c^(p)."""
    return [c.evaluate(c.start, p - 1 - j) for j in range(p)]


def approximate_ck(c: Curve, p: int, n: int) -> Curve:
    """
    C^p approximation of a C^p curve.

    Polygonal approximation of c^(p) on n segments, convolution with rho_n,
    then p-fold iterated integration with the initial jet of c.
    """
    if p > c.order:
        raise ContractViolation(f"cannot build a C^{p} approximation of a curve of order {c.order}")
    top = c.derivative(p) if p else c
    smoothed = convolve(polygon_approx(top, n), n)
    if p == 0:
        return smoothed
    logger.debug("C^%d approximation with %d polygon segments", p, n)
    return iterated_integrate(initial_jet(c, p), smoothed)
