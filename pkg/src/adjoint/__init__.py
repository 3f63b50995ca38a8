from .bounds import (GroenwallReport, ScalarGroenwallReport, constricted_probe, groenwall_check,
                     groenwall_scalar_check, groenwall_scalar_family, submultiplicativity_violation)
from .series import ad_exp_residual, ad_series, dexp_factor, dexp_factor_series
from .transport import TransportResult, omori_converse_residual, omori_transport

__all__ = [
    "ad_series", "dexp_factor", "dexp_factor_series", "ad_exp_residual",
    "omori_transport", "omori_converse_residual", "TransportResult",
    "groenwall_check", "GroenwallReport", "groenwall_scalar_family", "groenwall_scalar_check",
    "ScalarGroenwallReport", "submultiplicativity_violation", "constricted_probe",
]
