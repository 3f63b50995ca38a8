from .der import (ANALYTIC_TOL, FINITE_DIFFERENCE_TOL, der, der_at, inverse_rule_residual, left_translation_residual,
                  product_rule_residual, quotient_rule_residual, residual_tolerance, right_translation_gap,
                  right_translation_residual, substitution_rule_residual)
from .group_curve import GroupCurve, constant_group_curve, exp_curve, one_parameter_curve, sampled_group_curve

__all__ = [
    "GroupCurve", "constant_group_curve", "exp_curve", "one_parameter_curve", "sampled_group_curve",
    "der", "der_at", "residual_tolerance", "ANALYTIC_TOL", "FINITE_DIFFERENCE_TOL",
    "product_rule_residual", "inverse_rule_residual", "quotient_rule_residual", "substitution_rule_residual",
    "left_translation_residual", "right_translation_residual", "right_translation_gap",
]
