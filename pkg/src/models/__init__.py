"""Data models package."""
from .evolve_config import SCHEMES, EvolveConfig
from .results import (AdSeriesResult, CheckResult, DerivativeComparison, DuhamelResult, GridSupremum,
                      IdentityResidual, ProbeReport)
from .vector_spec import (Seminorm, VectorSpec, coordinate_seminorm, euclidean_seminorm, max_seminorm,
                          weighted_seminorm)

__all__ = [
    "Seminorm", "VectorSpec", "euclidean_seminorm", "max_seminorm", "weighted_seminorm", "coordinate_seminorm",
    "GridSupremum", "AdSeriesResult", "CheckResult", "ProbeReport", "IdentityResidual",
    "DerivativeComparison", "DuhamelResult", "EvolveConfig", "SCHEMES",
]
