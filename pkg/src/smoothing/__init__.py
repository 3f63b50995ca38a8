from .bump import (BumpProfile, BumpReparam, GluedCurve, bump, reparam_profile, smooth_piecewise,
                   smoothing_residual, sup_inflation)
from .mackey import (MackeySchedule, mackey_endpoint_residual, mackey_evolve, mackey_glue, partial_sum_schedule,
                     random_schedule, tail_smallness)

__all__ = [
    "BumpProfile", "bump", "BumpReparam", "GluedCurve", "reparam_profile", "smooth_piecewise",
    "smoothing_residual", "sup_inflation",
    "MackeySchedule", "mackey_glue", "mackey_evolve", "mackey_endpoint_residual", "tail_smallness",
    "random_schedule", "partial_sum_schedule",
]
