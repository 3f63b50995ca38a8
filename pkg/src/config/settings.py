"""
Numerical defaults and runtime settings.

Values come from the environment (prefix ``PRODINT_``) or an optional
``.env`` file, so a batch run can be tuned without touching code, e.g.
``PRODINT_THREADS=4 python main.py run config.json``.
"""
from functools import lru_cache
from typing import Tuple

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class NumericsSettings(BaseSettings):
    """
    Tolerances and caps shared by all numerical modules.

    Attributes:
        threads: Maximum worker threads for independent checks and probe batches
        quadrature_tol: Relative stopping threshold of the halving Simpson rule
        quadrature_max_level: Maximum number of interval halvings
        grid_points: Default sampling grid size of sup-seminorms
        series_rel_tol: Relative term threshold of ad-power series
        series_max_terms: Term cap of ad-power series
        fd_steps: Central-difference steps used with Richardson extrapolation
        residual_floor: Absolute floor under "k x error estimate" tolerances
        log_level: Logging level used by the CLI
    """

    model_config = SettingsConfigDict(env_prefix="PRODINT_", env_file=".env", extra="ignore")

    threads: int = Field(default=1, ge=1)
    quadrature_tol: float = Field(default=1e-12, gt=0)
    quadrature_max_level: int = Field(default=14, ge=4)
    grid_points: int = Field(default=1025, ge=3)
    series_rel_tol: float = Field(default=1e-16, gt=0)
    series_max_terms: int = Field(default=200, ge=2)
    fd_steps: Tuple[float, ...] = (1e-2, 5e-3, 2.5e-3)
    residual_floor: float = Field(default=1e-11, ge=0)
    log_level: str = "INFO"


@lru_cache()
def get_settings() -> NumericsSettings:
    """
    Cached settings provider.

    Returns the same NumericsSettings instance for the whole process;
    tests call ``get_settings.cache_clear()`` after patching the environment.
    """
    return NumericsSettings()
