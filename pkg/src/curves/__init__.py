from .analytic import ConstantCurve, FourierCurve, FunctionCurve, PolynomialCurve, zero_curve
from .combinators import (DerivativeCurve, LinearCombination, ReparametrizedCurve, RestrictedCurve,
                          ReversedCurve, SplineCurve)
from .interface import SMOOTH, Curve
from .piecewise import PiecewiseCurve, from_curve, piecewise_constant

__all__ = [
    "SMOOTH", "Curve", "ConstantCurve", "PolynomialCurve", "FourierCurve", "FunctionCurve", "zero_curve",
    "RestrictedCurve", "ReversedCurve", "LinearCombination", "DerivativeCurve", "ReparametrizedCurve",
    "SplineCurve", "PiecewiseCurve", "from_curve", "piecewise_constant",
]
