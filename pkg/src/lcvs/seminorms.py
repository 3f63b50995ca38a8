"""
Sup-type and L1 seminorms of curves.
"""
from typing import Optional

import numpy as np

from ..config.settings import get_settings
from ..curves import Curve, FunctionCurve, PiecewiseCurve
from ..exceptions import ContractViolation
from ..models.results import GridSupremum
from ..models.vector_spec import Seminorm
from .integration import riemann_integral


def ck_seminorm(c: Curve, p: Seminorm, s: int = 0, points: Optional[int] = None) -> GridSupremum:
    """
    Grid supremum of max_{0<=m<=s} p(c^(m)(t)).

    Raises:
        ContractViolation: If s exceeds the declared order of c
    """
    if s > c.order:
        raise ContractViolation(f"C^{s} seminorm requested for a curve of order {c.order}")
    points = points or get_settings().grid_points
    t = c.grid(points)
    values = np.max(np.stack([p.evaluate(c.evaluate(t, m)) for m in range(s + 1)]), axis=0)
    k = int(np.argmax(values))
    return GridSupremum(value=float(values[k]), grid_points=points, argmax=float(t[k]))


def sup_seminorm(c: Curve, p: Seminorm, points: Optional[int] = None) -> float:
    """p_infinity(c) on the sampling grid."""
    return ck_seminorm(c, p, 0, points).value


def l1_seminorm(c: Curve, p: Seminorm, a: Optional[float] = None, b: Optional[float] = None) -> float:
    """int_a^b p(c(s)) ds."""
    if isinstance(c, PiecewiseCurve):
        a = c.start if a is None else a
        b = c.end if b is None else b
        cuts = [a] + [t for t in c.breakpoints if a < t < b] + [b]
        return float(sum(l1_seminorm(c.restrict(left, right).segments[0], p)
                         for left, right in zip(cuts[:-1], cuts[1:])))
    scalar = FunctionCurve(lambda t, s: p.evaluate(c.evaluate(t))[:, None], 1, c.start, c.end,
                           name=f"{p.name}(c)")
    return float(riemann_integral(scalar, a, b)[0])
