from .probes import (arclength_reparam, continuity_bound_check, find_o, l1_continuity_check, mu_convex_probe,
                     product_inequality, product_inequality_probe, recipe_constant)

__all__ = [
    "mu_convex_probe", "find_o", "continuity_bound_check", "l1_continuity_check", "arclength_reparam",
    "product_inequality", "product_inequality_probe", "recipe_constant",
]
