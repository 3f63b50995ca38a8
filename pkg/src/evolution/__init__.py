from .evolve import evolve, evolve_piecewise
from .identities import (abelian_closed_form_residual, concat_residual, convergence_orders, grid_der,
                         hom_transport_residual, inverse_identity_residual, product_identity_residual,
                         quotient_identity_residual, reconstruct_residual, reverse, reverse_residual,
                         substitution_check)
from .interface import IEvolutionScheme
from .result import EvolutionResult
from .schemes import ExponentialMidpoint, LieEuler, get_scheme

__all__ = [
    "IEvolutionScheme", "LieEuler", "ExponentialMidpoint", "get_scheme", "EvolutionResult",
    "evolve", "evolve_piecewise", "grid_der", "reconstruct_residual", "concat_residual", "reverse",
    "reverse_residual", "substitution_check", "product_identity_residual", "quotient_identity_residual",
    "inverse_identity_residual", "hom_transport_residual", "abelian_closed_form_residual", "convergence_orders",
]
