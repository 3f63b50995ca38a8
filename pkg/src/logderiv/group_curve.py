"""
Group-valued curves with optional analytic tangents.
"""
from typing import Callable, Optional

import numpy as np

from ..curves import SMOOTH, Curve, PolynomialCurve
from ..exceptions import ContractViolation
from ..groups import GroupSpec

ElementFn = Callable[[float], np.ndarray]


class GroupCurve:
    """
    A curve mu: [r, r'] -> G.

    Attributes:
        group: Group the values live in
        start, end: Interval
        order: Differentiability class k >= 1 (SMOOTH for analytic curves)
        value_fn: t -> element
        tangent_fn: Optional t -> mu'(t) in ambient element coordinates
        name: Label for reports
    """

    def __init__(self, group: GroupSpec, start: float, end: float, value_fn: ElementFn,
                 tangent_fn: Optional[ElementFn] = None, order: int = SMOOTH, name: str = "mu"):
        if not start < end:
            raise ContractViolation(f"group curve interval must satisfy r < r', got [{start}, {end}]")
        self.group = group
        self.start = float(start)
        self.end = float(end)
        self.value_fn = value_fn
        self.tangent_fn = tangent_fn
        self.order = order
        self.name = name

    @property
    def has_tangent(self) -> bool:
        return self.tangent_fn is not None

    @property
    def length(self) -> float:
        return self.end - self.start

    def __call__(self, t: float) -> np.ndarray:
        return self.value_fn(float(t))

    def values(self, t: np.ndarray) -> np.ndarray:
        """Elements stacked along a new first axis."""
        return np.stack([self.value_fn(float(ti)) for ti in np.atleast_1d(t)])

    def tangent(self, t: float) -> np.ndarray:
        if self.tangent_fn is None:
            raise ContractViolation(f"{self.name} has no analytic tangent")
        return self.tangent_fn(float(t))

    # Pointwise operations

    def product(self, other: "GroupCurve") -> "GroupCurve":
        """t -> mu(t) nu(t)."""
        g = self.group
        self._check_compatible(other)
        tangent = None
        if self.has_tangent and other.has_tangent:
            tangent = lambda t: g.mult_tangent(self(t), self.tangent(t), other(t), other.tangent(t))
        return GroupCurve(g, self.start, self.end, lambda t: g.mult(self(t), other(t)), tangent,
                          min(self.order, other.order), f"{self.name}*{other.name}")

    def inverse(self) -> "GroupCurve":
        """t -> mu(t)^-1."""
        g = self.group
        tangent = (lambda t: g.inv_tangent(self(t), self.tangent(t))) if self.has_tangent else None
        return GroupCurve(g, self.start, self.end, lambda t: g.inv(self(t)), tangent, self.order,
                          f"{self.name}^-1")

    def quotient(self, other: "GroupCurve") -> "GroupCurve":
        """t -> mu(t)^-1 nu(t)."""
        return self.inverse().product(other)

    def right_translate(self, h: np.ndarray) -> "GroupCurve":
        """t -> mu(t) h."""
        return self.product(constant_group_curve(self.group, h, self.start, self.end))

    def left_translate(self, h: np.ndarray) -> "GroupCurve":
        """t -> h mu(t)."""
        return constant_group_curve(self.group, h, self.start, self.end).product(self)

    def compose(self, rho: Curve) -> "GroupCurve":
        """t -> mu(rho(t)) for a scalar curve rho with values in [r, r']."""
        if rho.dim != 1 or rho.order < 1:
            raise ContractViolation("reparametrization must be a scalar C^1 curve")
        inner = lambda t: float(np.clip(rho.evaluate(t)[0], self.start, self.end))
        tangent = (lambda t: rho.evaluate(t, 1)[0] * self.tangent(inner(t))) if self.has_tangent else None
        return GroupCurve(self.group, rho.start, rho.end, lambda t: self(inner(t)), tangent,
                          min(self.order, rho.order), f"{self.name}(rho)")

    def _check_compatible(self, other: "GroupCurve") -> None:
        if other.group is not self.group:
            raise ContractViolation(f"curves live in different groups: {self.group.name}, {other.group.name}")
        if not np.allclose([self.start, self.end], [other.start, other.end], rtol=0, atol=1e-12):
            raise ContractViolation("curves must share their interval")

    def __repr__(self) -> str:
        return f"GroupCurve({self.name} in {self.group.name} on [{self.start:g}, {self.end:g}])"


def constant_group_curve(group: GroupSpec, g: np.ndarray, start: float = 0.0, end: float = 1.0) -> GroupCurve:
    """t -> g."""
    g = np.array(g, copy=True)
    zero = np.zeros_like(g)
    return GroupCurve(group, start, end, lambda t: g, lambda t: zero, SMOOTH, "const")


def exp_curve(group: GroupSpec, f: Curve, name: str = "exp(f)") -> GroupCurve:
    """
    t -> exp(f(t)) for an algebra-valued curve f.

    The tangent is dR_mu(dexp_right(f, f')), available when f is C^1.
    """
    if f.dim != group.dim:
        raise ContractViolation(f"curve dimension {f.dim} does not match {group.name} (d={group.dim})")
    value = lambda t: group.exp(f.evaluate(t))
    tangent = None
    if f.order >= 1:
        tangent = lambda t: group.algebra_to_tangent(
            group.dexp_right(f.evaluate(t), f.evaluate(t, 1)), group.exp(f.evaluate(t)))
    return GroupCurve(group, f.start, f.end, value, tangent, f.order, name)


def one_parameter_curve(group: GroupSpec, x, start: float = 0.0, end: float = 1.0) -> GroupCurve:
    """t -> exp(t X)."""
    x = np.asarray(x, dtype=float)
    line = PolynomialCurve(np.stack([np.zeros_like(x), x]), start, end)
    return exp_curve(group, line, name="exp(tX)")


def sampled_group_curve(group: GroupSpec, times: np.ndarray, elements: np.ndarray,
                        name: str = "sampled") -> GroupCurve:
    """
    Group curve through sampled elements.

    Between nodes the increment mu_{k+1} mu_k^-1 is interpolated linearly in
    the chart: mu(t) = Xi^-1(s Xi(mu_{k+1} mu_k^-1)) mu_k with s the fraction
    of the step. This is a one-parameter subgroup only for exponential
    charts; for chart a -> a - 1 (unit groups) it is a chart line.
    """
    times = np.asarray(times, dtype=float)

    def value(t: float) -> np.ndarray:
        k = int(np.clip(np.searchsorted(times, t, side="right") - 1, 0, times.size - 2))
        frac = (t - times[k]) / (times[k + 1] - times[k])
        if frac <= 0.0:
            return elements[k]
        if frac >= 1.0:
            return elements[k + 1]
        step = group.chart(group.mult(elements[k + 1], group.inv(elements[k])))
        return group.mult(group.unchart(frac * step), elements[k])

    return GroupCurve(group, times[0], times[-1], value, None, 1, name)
