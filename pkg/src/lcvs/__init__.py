from .approximation import (ConvolvedCurve, IteratedIntegral, Mollifier, approximate_ck, convolve, initial_jet,
                            iterated_integrate, polygon_approx)
from .integration import (cumulative_integral, integrate_callable, integrate_samples, piecewise_integral,
                          riemann_integral)
from .richardson import convergence_order, pairwise_orders, richardson_extrapolate
from .seminorms import ck_seminorm, l1_seminorm, sup_seminorm

__all__ = [
    "riemann_integral", "piecewise_integral", "integrate_callable", "integrate_samples", "cumulative_integral",
    "ck_seminorm", "sup_seminorm", "l1_seminorm",
    "polygon_approx", "convolve", "Mollifier", "ConvolvedCurve", "iterated_integrate", "IteratedIntegral",
    "initial_jet", "approximate_ck",
    "richardson_extrapolate", "convergence_order", "pairwise_orders",
]
