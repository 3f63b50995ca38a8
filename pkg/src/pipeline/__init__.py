"""Experiment pipeline package."""
from .experiment_pipeline import ExperimentPipeline
from .experiments import EXPERIMENTS, CheckOutcome, CheckTask, Experiment, get_experiment

__all__ = ['ExperimentPipeline', 'EXPERIMENTS', 'CheckOutcome', 'CheckTask', 'Experiment', 'get_experiment']
