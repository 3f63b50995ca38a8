"""
Richardson extrapolation and observed convergence orders.
"""
from typing import Sequence, Tuple

import numpy as np

from ..exceptions import ContractViolation


def richardson_extrapolate(steps: Sequence[float], values: Sequence[np.ndarray], order: int = 2,
                           order_step: int = 2) -> Tuple[np.ndarray, float]:
    """
    Neville tableau for A(h) = A + c_1 h^order + c_2 h^(order+order_step) + ...

    Args:
        steps: Decreasing step sizes h_0 > h_1 > ...
        values: Estimates A(h_i), scalars or arrays
        order: Leading error exponent
        order_step: Increment between successive error exponents

    Returns:
        (value, err): Extrapolated value and the max-abs change of the last
        tableau column, used as its error estimate
    """
    steps = np.asarray(steps, dtype=float)
    table = [np.asarray(v, dtype=float) for v in values]
    if len(table) != steps.size or steps.size < 1:
        raise ContractViolation("Richardson extrapolation needs one value per step")
    if steps.size == 1:
        return table[0], float("inf")
    err = float("inf")
    for k in range(1, steps.size):
        exponent = order + (k - 1) * order_step
        updated = []
        for i in range(k, steps.size):
            factor = (steps[i - k] / steps[i]) ** exponent
            updated.append(table[i - k + 1] + (table[i - k + 1] - table[i - k]) / (factor - 1.0))
        err = float(np.max(np.abs(updated[-1] - table[-1])))
        table = updated
    return table[-1], err


def convergence_order(steps: Sequence[float], errors: Sequence[float]) -> float:
    """Least-squares slope of log2(error) against log2(step)."""
    steps = np.asarray(steps, dtype=float)
    errors = np.asarray(errors, dtype=float)
    mask = errors > 0
    if np.count_nonzero(mask) < 2:
        raise ContractViolation("need at least two positive errors to measure a convergence order")
    slope, _ = np.polyfit(np.log2(steps[mask]), np.log2(errors[mask]), 1)
    return float(slope)


def pairwise_orders(errors: Sequence[float], ratio: float = 2.0) -> np.ndarray:
    """log_ratio(e_i / e_{i+1}) for successive refinements."""
    errors = np.asarray(errors, dtype=float)
    return np.log(errors[:-1] / errors[1:]) / np.log(ratio)
