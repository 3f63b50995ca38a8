"""
Gluing a smooth curve on [0, 1] from a rapidly converging sequence of group elements.

Segment n lives on [t_n, t_{n+1}] with t_n = 1 - 2^-n and length
delta_n = 2^-(n+1). On it the curve is the bump-reparametrized right
logarithmic derivative of sigma -> Xi^-1(sigma Y_n), Y_n = X_n / delta_n,
so that its product integral over the segment is Xi^-1(X_n).
"""
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np

from ..curves import SMOOTH, Curve, FunctionCurve, ReparametrizedCurve, zero_curve
from ..evolution import EvolutionResult, evolve
from ..exceptions import ContractViolation, OutOfChartError, ScheduleDecayError
from ..groups import GroupSpec
from ..models.evolve_config import EvolveConfig
from .bump import BumpReparam, GluedCurve

logger = logging.getLogger(__name__)

DEFAULT_LENGTH = 6
MACKEY_STEP = 2.0 ** -12


@dataclass
class MackeySchedule:
    """
    A sequence g_0, ..., g_N with chart increments X_n = Xi(g_n^-1 g_{n-1}).

    Attributes:
        group: Group the elements live in
        elements: g_0, ..., g_N
        decay: Constant c in the decay check ||X_n|| <= c 2^(-n^2)
    """

    group: GroupSpec
    elements: List[np.ndarray]
    decay: float = 1.0

    @classmethod
    def from_increments(cls, group: GroupSpec, increments: Sequence, start: Optional[np.ndarray] = None,
                        decay: float = 1.0) -> "MackeySchedule":
        """Build g_n = g_{n-1} Xi^-1(X_n)^-1 from X_1, ..., X_N."""
        g = group.identity() if start is None else np.asarray(start)
        elements = [g]
        for x in increments:
            g = group.mult(g, group.inv(group.unchart(group.check_algebra(x))))
            elements.append(g)
        return cls(group, elements, decay)

    @property
    def length(self) -> int:
        return len(self.elements) - 1

    def breakpoints(self, n: Optional[int] = None) -> np.ndarray:
        """t_0, ..., t_{n+1} with t_k = 1 - 2^-k."""
        n = self.length if n is None else n
        return 1.0 - 2.0 ** -np.arange(n + 2, dtype=float)

    def increments(self) -> np.ndarray:
        """X_1, ..., X_N as rows."""
        out = []
        for n in range(1, self.length + 1):
            step = self.group.mult(self.group.inv(self.elements[n]), self.elements[n - 1])
            try:
                out.append(self.group.chart(step))
            except OutOfChartError as exc:
                raise ContractViolation(f"g_{n}^-1 g_{n - 1} leaves the chart: {exc}") from exc
        return np.array(out).reshape(self.length, self.group.dim)

    def scaled_increments(self) -> np.ndarray:
        """Y_n = 2^(n+1) X_n."""
        n = np.arange(1, self.length + 1, dtype=float)
        return self.increments() * (2.0 ** (n + 1))[:, None]

    def check_decay(self, n: Optional[int] = None) -> None:
        """Raise ScheduleDecayError at the first X_k with ||X_k|| > c 2^(-k^2), k <= n."""
        p = self.group.algebra.default
        for k, x in enumerate(self.increments()[: n or self.length], start=1):
            norm, bound = float(p(x)), self.decay * 2.0 ** (-k * k)
            if norm > bound * (1.0 + 1e-12):
                raise ScheduleDecayError(k, norm, bound)

    def telescoped(self, n: Optional[int] = None) -> np.ndarray:
        """Xi^-1(X_n) ... Xi^-1(X_1) = g_n^-1 g_0."""
        n = self.length if n is None else n
        return self.group.mult(self.group.inv(self.elements[n]), self.elements[0])

    def direct_product(self, n: Optional[int] = None) -> np.ndarray:
        """Xi^-1(X_n) ... Xi^-1(X_1) multiplied out increment by increment."""
        n = self.length if n is None else n
        g = self.group.identity()
        for x in self.increments()[:n]:
            g = self.group.mult(self.group.unchart(x), g)
        return g

    def validate(self) -> bool:
        try:
            self.increments()
        except ContractViolation:
            return False
        return self.length >= 1 and self.decay > 0


def _segment(group: GroupSpec, y: np.ndarray, a: float, b: float) -> Curve:
    delta = b - a
    line = FunctionCurve(lambda sigma, s: group.line_log_derivative(y, sigma, s), group.dim,
                         0.0, delta, order=SMOOTH, name="line")
    return ReparametrizedCurve(line, BumpReparam(a, b, offset=0.0), weighted=True)


def mackey_glue(seq: MackeySchedule, n: int = DEFAULT_LENGTH) -> GluedCurve:
    """
    The glued smooth curve on [0, 1] for the first n increments.

    [0, 1/2] and [t_{n+1}, 1] carry the zero curve.

    Raises:
        ScheduleDecayError: If an increment breaks the decay check
    """
    if n < 1 or n > seq.length:
        raise ContractViolation(f"need 1 <= N <= {seq.length}, got {n}")
    seq.check_decay(n)
    group = seq.group
    t = seq.breakpoints(n)
    pieces: List[Curve] = [zero_curve(group.dim, t[0], t[1])]
    for k, y in enumerate(seq.scaled_increments()[:n], start=1):
        pieces.append(_segment(group, y, t[k], t[k + 1]))
    breakpoints = list(t)
    pieces.append(zero_curve(group.dim, t[-1], 1.0))
    breakpoints.append(1.0)
    logger.debug("glued %d segments on %s", n, group.name)
    return GluedCurve(breakpoints, pieces)


def mackey_evolve(seq: MackeySchedule, n: int = DEFAULT_LENGTH,
                  cfg: Optional[EvolveConfig] = None) -> EvolutionResult:
    """Product integral of the glued curve over [0, 1]."""
    cfg = cfg or EvolveConfig(step=MACKEY_STEP)
    return evolve(seq.group, mackey_glue(seq, n), cfg)


def mackey_endpoint_residual(seq: MackeySchedule, n: int = DEFAULT_LENGTH,
                             cfg: Optional[EvolveConfig] = None) -> float:
    """Chart distance between the evolved endpoint and the direct product of increments."""
    result = mackey_evolve(seq, n, cfg)
    return seq.group.distance(result.endpoint, seq.direct_product(n))


def tail_smallness(curve: GluedCurve, max_order: int = 3, points: int = 65) -> float:
    """
    Max |psi^(s)|, s <= max_order, on the zero tail [t_{N+1}, 1] and as the
    left limit of the last glued segment at t_{N+1}.
    """
    last = curve.pieces.segments[-2]
    t = np.linspace(curve.breakpoints[-2], curve.end, points)
    return max(max(float(np.max(np.abs(curve.evaluate(t, s)))), float(np.max(np.abs(last.evaluate(last.end, s)))))
               for s in range(max_order + 1))


def random_schedule(group: GroupSpec, rng: np.random.Generator, n: int = DEFAULT_LENGTH,
                    decay: float = 1.0, start: Optional[np.ndarray] = None) -> MackeySchedule:
    """Increments with random directions and norms c 2^(-k^2) / 2."""
    p = group.algebra.default
    increments = []
    for k in range(1, n + 1):
        x = rng.standard_normal(group.dim)
        increments.append(0.5 * decay * 2.0 ** (-k * k) * x / float(p(x)))
    return MackeySchedule.from_increments(group, increments, start, decay)


def partial_sum_schedule(n: int = DEFAULT_LENGTH) -> MackeySchedule:
    """abelian(1) with g_n = sum_{k<=n} 2^(-k^2); the glued endpoint is g_0 - g_n."""
    from ..groups import make_group
    group = make_group("abelian(1)")
    sums = np.concatenate([[0.0], np.cumsum(2.0 ** -np.arange(1, n + 1) ** 2)])
    return MackeySchedule(group, [np.array([s]) for s in sums])
