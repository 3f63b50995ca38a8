"""Configuration: runtime settings, logging and the experiment schema."""
from .experiment_config import (EXPERIMENT_KINDS, SCHEMA_VERSION, ExperimentConfig, GroupConfig, OutputConfig,
                                SchemeConfig, load_experiment_config, parse_experiment_config)
from .logging_config import configure_logging
from .settings import NumericsSettings, get_settings

__all__ = [
    "NumericsSettings", "get_settings", "configure_logging",
    "ExperimentConfig", "GroupConfig", "SchemeConfig", "OutputConfig", "EXPERIMENT_KINDS", "SCHEMA_VERSION",
    "load_experiment_config", "parse_experiment_config",
]
