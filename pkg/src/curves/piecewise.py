"""
Piecewise curves: breakpoints plus one Curve per segment.

No continuity is required across breakpoints. Evaluation is right-continuous
(a breakpoint belongs to the segment starting there), except at the final
endpoint which belongs to the last segment.
"""
from typing import List, Sequence

import numpy as np

from ..exceptions import ContractViolation
from .analytic import ConstantCurve
from .combinators import RestrictedCurve
from .interface import Curve


class PiecewiseCurve(Curve):
    """
    Curve on [t_0, t_n] given by segments on [t_p, t_{p+1}].

    Attributes:
        breakpoints: Strictly increasing array t_0 < ... < t_n
        segments: List of n curves; segment p lives on [t_p, t_{p+1}]
    """

    def __init__(self, breakpoints: Sequence[float], segments: Sequence[Curve]):
        breakpoints = np.asarray(breakpoints, dtype=float)
        segments = list(segments)
        if breakpoints.ndim != 1 or breakpoints.size < 2:
            raise ContractViolation("a piecewise curve needs at least two breakpoints")
        if np.any(np.diff(breakpoints) <= 0):
            raise ContractViolation(f"breakpoints must increase strictly: {breakpoints}")
        if len(segments) != breakpoints.size - 1:
            raise ContractViolation(
                f"{breakpoints.size} breakpoints need {breakpoints.size - 1} segments, got {len(segments)}")
        dims = {seg.dim for seg in segments}
        if len(dims) != 1:
            raise ContractViolation(f"segments disagree on dimension: {sorted(dims)}")
        tol = 1e-12 * max(1.0, float(np.max(np.abs(breakpoints))))
        for p, seg in enumerate(segments):
            if abs(seg.start - breakpoints[p]) > tol or abs(seg.end - breakpoints[p + 1]) > tol:
                raise ContractViolation(
                    f"segment {p} lives on [{seg.start}, {seg.end}], expected "
                    f"[{breakpoints[p]}, {breakpoints[p + 1]}]")
        super().__init__(breakpoints[0], breakpoints[-1], dims.pop(), min(s.order for s in segments))
        self.breakpoints = breakpoints
        self.segments = segments

    @property
    def count(self) -> int:
        return len(self.segments)

    def segment_index(self, t: np.ndarray) -> np.ndarray:
        """Index of the segment owning each time."""
        idx = np.searchsorted(self.breakpoints, t, side="right") - 1
        return np.clip(idx, 0, self.count - 1)

    def _evaluate(self, t: np.ndarray, s: int) -> np.ndarray:
        out = np.empty((t.size, self.dim))
        idx = self.segment_index(t)
        for p in np.unique(idx):
            mask = idx == p
            seg = self.segments[p]
            out[mask] = seg.evaluate(np.clip(t[mask], seg.start, seg.end), s)
        return out

    def refine(self, t: float) -> "PiecewiseCurve":
        """Split the segment containing the interior time t; the curve is unchanged."""
        if not self.start < t < self.end:
            raise ContractViolation(f"refinement point {t} must be interior to [{self.start}, {self.end}]")
        if np.any(np.isclose(self.breakpoints, t, rtol=0, atol=1e-14)):
            return self
        p = int(self.segment_index(np.array([t]))[0])
        seg = self.segments[p]
        segments = (self.segments[:p]
                    + [RestrictedCurve(seg, seg.start, t), RestrictedCurve(seg, t, seg.end)]
                    + self.segments[p + 1:])
        return PiecewiseCurve(np.insert(self.breakpoints, p + 1, t), segments)

    def restrict(self, a: float, b: float) -> "PiecewiseCurve":
        inner = [t for t in self.breakpoints if a < t < b]
        points = [a] + inner + [b]
        segments: List[Curve] = []
        for left, right in zip(points[:-1], points[1:]):
            seg = self.segments[int(self.segment_index(np.array([left]))[0])]
            segments.append(RestrictedCurve(seg, left, right))
        return PiecewiseCurve(points, segments)

    def jumps(self, s: int = 0) -> np.ndarray:
        """Max-abs jump of the s-th derivative at each interior breakpoint."""
        return np.array([
            float(np.max(np.abs(self.segments[p].evaluate(t, s) - self.segments[p - 1].evaluate(t, s))))
            for p, t in enumerate(self.breakpoints[1:-1], start=1)
        ])

    def __repr__(self) -> str:
        return (f"PiecewiseCurve(breakpoints={np.array2string(self.breakpoints, precision=4)}, "
                f"dim={self.dim}, order={self.order})")


def from_curve(curve: Curve, breakpoints: Sequence[float]) -> PiecewiseCurve:
    """View a curve as piecewise over the given breakpoints."""
    breakpoints = np.asarray(breakpoints, dtype=float)
    return PiecewiseCurve(breakpoints, [RestrictedCurve(curve, a, b)
                                        for a, b in zip(breakpoints[:-1], breakpoints[1:])])


def piecewise_constant(breakpoints: Sequence[float], values) -> PiecewiseCurve:
    """Step curve taking values[p] on [t_p, t_{p+1})."""
    breakpoints = np.asarray(breakpoints, dtype=float)
    values = np.atleast_2d(np.asarray(values, dtype=float))
    return PiecewiseCurve(breakpoints, [ConstantCurve(v, a, b)
                                        for v, a, b in zip(values, breakpoints[:-1], breakpoints[1:])])
