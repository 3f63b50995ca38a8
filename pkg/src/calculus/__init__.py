from .differentiation import (check_difference_quotients, directional_derivative_at_zero, duhamel, duhamel_slope,
                              evol_differential, evol_differential_check, param_derivative, param_derivative_slope,
                              transported_integral)
from .families import (ParamFamily, affine_family, linear_family, quadratic_family, random_family,
                       sine_family)

__all__ = [
    "ParamFamily", "linear_family", "affine_family", "quadratic_family", "random_family", "sine_family",
    "directional_derivative_at_zero", "param_derivative", "param_derivative_slope", "check_difference_quotients",
    "transported_integral", "evol_differential", "evol_differential_check", "duhamel", "duhamel_slope",
]
