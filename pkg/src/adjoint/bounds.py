"""
Growth bounds for adjoint transport: submultiplicative seminorms, the
Groenwall estimate and constricted ad-compositions.
"""
import logging
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from ..curves import Curve
from ..evolution import evolve
from ..exceptions import ContractViolation
from ..groups import GroupSpec
from ..lcvs import cumulative_integral
from ..models.evolve_config import EvolveConfig
from ..models.results import ProbeReport
from ..models.vector_spec import Seminorm

logger = logging.getLogger(__name__)


def submultiplicativity_violation(group: GroupSpec, w: Seminorm, rng: np.random.Generator,
                                  samples: int = 256) -> float:
    """max over random pairs of w([X, Y]) - w(X) w(Y); <= 0 means no violation found."""
    worst = -np.inf
    for _ in range(samples):
        x, y = rng.standard_normal((2, group.dim)) * rng.uniform(0.1, 3.0)
        worst = max(worst, float(w(group.bracket(x, y)) - w(x) * w(y)))
    return worst


@dataclass
class GroenwallReport:
    """
    Pointwise Groenwall check w(Ad_{mu(t)} Y) <= exp(int_r^t w(phi)) w(Y).

    Attributes:
        times: Evolution grid
        lhs: w(Ad_{mu(t)} Y)
        rhs: exp(int_r^t w(phi)) w(Y)
        rhs_sup: exp(|t - r| sup w(phi)) w(Y), the coarser bound
        tolerance: Absolute slack tolerance
    """

    times: np.ndarray
    lhs: np.ndarray
    rhs: np.ndarray
    rhs_sup: np.ndarray
    tolerance: float

    @property
    def slack(self) -> np.ndarray:
        return self.rhs - self.lhs

    @property
    def holds(self) -> np.ndarray:
        return self.lhs <= self.rhs + self.tolerance

    @property
    def passed(self) -> bool:
        return bool(np.all(self.holds) and np.all(self.lhs <= self.rhs_sup + self.tolerance))

    @property
    def min_slack(self) -> float:
        return float(np.min(self.slack))


def groenwall_check(group: GroupSpec, phi: Curve, y, w: Optional[Seminorm] = None,
                    cfg: Optional[EvolveConfig] = None, tolerance: float = 1e-8,
                    rng: Optional[np.random.Generator] = None) -> GroenwallReport:
    """
    Check the exponential bound of Ad-transport along int phi.

    Raises:
        ContractViolation: If w is not submultiplicative on samples
    """
    w = w or group.submultiplicative
    if w is None:
        raise ContractViolation(f"{group.name} declares no submultiplicative seminorm")
    violation = submultiplicativity_violation(group, w, rng or np.random.default_rng(0))
    if violation > 1e-12:
        raise ContractViolation(f"seminorm {w.name} is not submultiplicative on {group.name} (excess {violation:.3e})")
    y = group.check_algebra(y)
    mu = evolve(group, phi, cfg or EvolveConfig())
    lhs = np.array([w(group.Ad(g, y)) for g in mu.elements])
    rates = w(phi.evaluate(mu.times))
    rhs = np.exp(cumulative_integral(rates, mu.times)) * w(y)
    rhs_sup = np.exp((mu.times - mu.times[0]) * float(np.max(rates))) * w(y)
    return GroenwallReport(mu.times, lhs, rhs, rhs_sup, tolerance)


@dataclass
class ScalarGroenwallReport:
    """Hypothesis and conclusion slack of the scalar Groenwall lemma on one family."""

    hypothesis_violation: float
    conclusion_violation: float

    @property
    def passed(self) -> bool:
        return self.hypothesis_violation <= 1e-10 and self.conclusion_violation <= 1e-10


def groenwall_scalar_family(rng: np.random.Generator, points: int = 4097):
    """
    Random (t, alpha, beta, C) with alpha <= C + int alpha beta by construction.

    alpha = C + u - eta with eta >= 0, where u = int alpha beta solves
    u' = beta (C + u - eta), u(0) = 0, i.e. u = e^B int e^-B beta (C - eta)
    with B = int beta.
    """
    t = np.linspace(0.0, 1.0, points)
    a, b, k = rng.uniform(0.1, 2.0), rng.uniform(0.0, 0.09), rng.integers(1, 5)
    beta = a * (1.0 + 10 * b * np.sin(2 * np.pi * k * t))
    c = rng.uniform(0.1, 3.0)
    eta = rng.uniform(0.0, 1.0) * t ** 2 * (1.0 + np.cos(3 * t))
    big_b = cumulative_integral(beta, t)
    u = np.exp(big_b) * cumulative_integral(np.exp(-big_b) * beta * (c - eta), t)
    alpha = c + u - eta
    return t, alpha, beta, c


def groenwall_scalar_check(t: np.ndarray, alpha: np.ndarray, beta: np.ndarray, c: float) -> ScalarGroenwallReport:
    """Verify the hypothesis numerically, then the conclusion alpha <= C exp(int beta)."""
    hypothesis = float(np.max(alpha - (c + cumulative_integral(alpha * beta, t))))
    conclusion = float(np.max(alpha - c * np.exp(cumulative_integral(beta, t))))
    return ScalarGroenwallReport(hypothesis, conclusion)


def _composed_norm(matrix: np.ndarray, v: Seminorm, rng: np.random.Generator, directions: int) -> Tuple[float, bool]:
    """Operator norm of matrix for v; exact when v has an invertible weight, sampled otherwise."""
    if v.weight is not None and np.linalg.matrix_rank(v.weight) == v.weight.shape[1]:
        w = v.weight
        return float(np.linalg.norm(w @ matrix @ np.linalg.pinv(w), ord=2)), True
    xs = rng.standard_normal((directions, matrix.shape[0]))
    norms = v(xs)
    keep = norms > 1e-12
    return float(np.max(v(xs[keep] @ matrix.T) / norms[keep])), False


def constricted_probe(group: GroupSpec, xs: Sequence[np.ndarray], v: Optional[Seminorm] = None,
                      n_max: int = 6, samples: int = 200,
                      rng: Optional[np.random.Generator] = None,
                      c: Optional[float] = None) -> Tuple[float, ProbeReport]:
    """
    Smallest C on the sample with ||ad_{X_1} ... ad_{X_n}||_{v->v} <= C^n for n <= n_max.

    Tuples are drawn with replacement from xs. Every sampled composition is
    then checked against C^n, with C the declared constant c when given and
    the sampled one otherwise.

    Returns:
        (C, report): report.extra holds the per-n constants "C_n" and the
        sampled "C"; report.max_violation is the largest ||...|| - C^n
    """
    rng = rng or np.random.default_rng(0)
    v = v or group.algebra.default
    mats = [group.ad_matrix(np.asarray(x, dtype=float)) for x in xs]
    if not mats:
        raise ContractViolation("constricted probe needs at least one algebra element")
    if c is not None and c < 0:
        raise ContractViolation(f"constricted constant must be non-negative, got {c}")
    report = ProbeReport(description=f"constricted({group.name}, {v.name})", tolerance=1e-12)
    seen = []
    best = 0.0
    exact_norms = True
    for n in range(1, n_max + 1):
        worst = 0.0
        tuples = [(i,) for i in range(len(mats))] if n == 1 else \
            [tuple(rng.integers(0, len(mats), size=n)) for _ in range(samples)]
        for idx in tuples:
            composed = np.eye(group.dim)
            for i in idx:
                composed = composed @ mats[i]
            norm, exact = _composed_norm(composed, v, rng, 512)
            exact_norms = exact_norms and exact
            worst = max(worst, norm)
            seen.append((n, norm, idx))
        c_n = worst ** (1.0 / n)
        report.extra[f"C_{n}"] = c_n
        best = max(best, c_n)
    constant = best if c is None else float(c)
    for n, norm, idx in seen:
        report.record(norm - constant ** n, tuple(np.asarray(xs[i], dtype=float) for i in idx))
    report.extra["C"] = best
    report.description += "" if exact_norms else " [sampled norms]"
    return constant, report
