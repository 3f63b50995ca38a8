"""
Sampled evolutions.
"""
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from ..curves import Curve
from ..groups import GroupSpec
from ..logderiv import GroupCurve
from .interface import IEvolutionScheme


@dataclass
class EvolutionResult:
    """
    A computed product integral t -> int_r^t phi on a grid that is uniform
    on each segment.

    Attributes:
        group: Group the evolution lives in
        phi: Integrand
        scheme: Scheme used
        times: Grid t_0 = r < ... < t_n = r'
        elements: mu(t_k), stacked along axis 0; elements[0] is the identity
        step: Nominal step h (the largest segment step)
        error_estimate: Richardson estimate per algebra seminorm name
        bounds: Node indices 0 = i_0 < ... < i_m = n of the segment ends;
            None for a single uniform segment
    """

    group: GroupSpec
    phi: Curve
    scheme: IEvolutionScheme
    times: np.ndarray
    elements: np.ndarray
    step: float
    error_estimate: Dict[str, float] = field(default_factory=dict)
    bounds: Optional[Tuple[int, ...]] = None

    @property
    def endpoint(self) -> np.ndarray:
        return self.elements[-1]

    @property
    def steps(self) -> int:
        return self.times.size - 1

    @property
    def segments(self) -> List[Tuple[int, int]]:
        """(first, last) node index of every uniform segment."""
        bounds = self.bounds or (0, self.steps)
        return list(zip(bounds[:-1], bounds[1:]))

    @property
    def estimate(self) -> float:
        """Estimate in the default seminorm (0 when none was computed)."""
        return float(self.error_estimate.get(self.group.algebra.default.name, 0.0))

    def at(self, t: float) -> np.ndarray:
        """
        mu(t) for any t in [r, r'].

        Off the grid the scheme is continued with a partial step from the
        preceding node.
        """
        t = float(t)
        k = int(np.clip(np.searchsorted(self.times, t, side="right") - 1, 0, self.steps))
        dt = t - self.times[k]
        if k == self.steps or dt <= 0.0:
            return self.elements[k]
        tau = float(self.scheme.node(self.times[k], dt))
        return self.group.mult(self.group.exp(dt * self.phi.evaluate(tau)), self.elements[k])

    @property
    def curve(self) -> GroupCurve:
        return GroupCurve(self.group, self.times[0], self.times[-1], self.at, None, 1,
                          f"evol[{self.scheme.name}]")

    def validate(self) -> bool:
        return bool(np.array_equal(self.elements[0], self.group.identity())
                    and np.all(np.isfinite(self.elements)))

    def __repr__(self) -> str:
        return (f"EvolutionResult({self.group.name}, {self.scheme.name}, steps={self.steps}, "
                f"estimate={self.estimate:.3e})")
