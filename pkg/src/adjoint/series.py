"""
ad-power series: alpha_{X,Y}(t) = sum t^n/n! ad_X^n(Y) and the dexp factor
sum (-ad_X)^n/(n+1)! (Z).
"""
import logging
from typing import Optional

import numpy as np

from ..config.settings import get_settings
from ..exceptions import SeriesConvergenceError
from ..groups import GroupSpec
from ..models.results import AdSeriesResult

logger = logging.getLogger(__name__)


def _sum_series(matrix: np.ndarray, first: np.ndarray, denominator, nilpotent: bool,
                rel_tol: Optional[float], max_terms: Optional[int]) -> AdSeriesResult:
    """
    sum_n term_n with term_0 = first and term_n = matrix @ term_{n-1} / denominator(n).

    Stops when a term is exactly zero (exact flag) or its norm drops below
    rel_tol times the largest term seen.
    """
    settings = get_settings()
    rel_tol = settings.series_rel_tol if rel_tol is None else rel_tol
    max_terms = settings.series_max_terms if max_terms is None else max_terms
    term = np.asarray(first, dtype=float)
    total = term.copy()
    largest = float(np.linalg.norm(term))
    if largest == 0.0:
        return AdSeriesResult(total, 1, 0.0, exact=True)
    for n in range(1, max_terms):
        term = matrix @ term / denominator(n)
        size = float(np.linalg.norm(term))
        if size == 0.0:
            return AdSeriesResult(total, n, 0.0, exact=True)
        total = total + term
        largest = max(largest, size)
        if size < rel_tol * largest and not nilpotent:
            return AdSeriesResult(total, n + 1, size, exact=False)
    raise SeriesConvergenceError("ad-power series did not converge", max_terms, size)


def ad_series(group: GroupSpec, x, y, t: float = 1.0, rel_tol: Optional[float] = None,
              max_terms: Optional[int] = None) -> AdSeriesResult:
    """
    alpha_{X,Y}(t) = sum_n t^n/n! ad_X^n(Y), which equals Ad_{exp(tX)}(Y).

    Raises:
        SeriesConvergenceError: If the term cap is reached first
    """
    matrix = t * group.ad_matrix(group.check_algebra(x))
    return _sum_series(matrix, group.check_algebra(y), float, group.nilpotent, rel_tol, max_terms)


def dexp_factor(group: GroupSpec, x, z, rel_tol: Optional[float] = None,
                max_terms: Optional[int] = None) -> np.ndarray:
    """(id - exp(-ad_X)) / ad_X applied to Z."""
    return dexp_factor_series(group, x, z, rel_tol, max_terms).value


def dexp_factor_series(group: GroupSpec, x, z, rel_tol: Optional[float] = None,
                       max_terms: Optional[int] = None) -> AdSeriesResult:
    """dexp_factor with its truncation metadata."""
    matrix = -group.ad_matrix(group.check_algebra(x))
    return _sum_series(matrix, group.check_algebra(z), lambda n: float(n + 1), group.nilpotent,
                       rel_tol, max_terms)


def ad_exp_residual(group: GroupSpec, x, y, t: float = 1.0) -> float:
    """|alpha_{X,Y}(t) - Ad_{exp(tX)}(Y)| in the default seminorm."""
    x = group.check_algebra(x)
    direct = group.Ad(group.exp(t * x), y)
    return float(group.algebra.default(ad_series(group, x, y, t).value - direct))
