"""
Tests for runtime settings and the JSON experiment schema.
"""
from pathlib import Path

import numpy as np
import pytest

from src.config import EXPERIMENT_KINDS, ExperimentConfig, get_settings, load_experiment_config, \
    parse_experiment_config
from src.curves import PiecewiseCurve
from src.exceptions import ConfigError
from src.models.evolve_config import EvolveConfig
from src.pipeline import EXPERIMENTS


def test_settings_defaults():
    """Test the numerical defaults."""
    settings = get_settings()
    assert settings.threads == 1
    assert settings.residual_floor == 1e-11
    assert settings.fd_steps == (1e-2, 5e-3, 2.5e-3)
    assert get_settings() is settings


def test_settings_from_environment(monkeypatch):
    """Test PRODINT_ overrides after clearing the provider cache."""
    monkeypatch.setenv("PRODINT_THREADS", "3")
    monkeypatch.setenv("PRODINT_RESIDUAL_FLOOR", "1e-9")
    get_settings.cache_clear()
    assert get_settings().threads == 3
    assert get_settings().residual_floor == 1e-9


def test_every_kind_is_registered():
    """Test that the schema kinds and the experiment registry agree."""
    assert set(EXPERIMENT_KINDS) == set(EXPERIMENTS)


def test_minimal_config_defaults():
    """Test the defaults filled in for a minimal config."""
    config = parse_experiment_config({"kind": "evolve", "groups": [{"name": "so3"}]})
    assert isinstance(config, ExperimentConfig)
    assert config.seed == 0
    assert config.samples == 5
    assert config.scheme.to_evolve_config() == EvolveConfig("midpoint", 2.0 ** -7)
    assert config.output.directory == "reports"
    assert config.tolerance("der", 1e-10) == 1e-10
    assert config.option("n_max", 8) == 8


def test_overrides_return_copies(small_config):
    """Test that seed and output overrides leave the original untouched."""
    config = parse_experiment_config(small_config)
    changed = config.with_seed(9).with_output("elsewhere")
    assert (changed.seed, changed.output.directory) == (9, "elsewhere")
    assert config.seed == 3
    assert changed.output.convergence == config.output.convergence


@pytest.mark.parametrize("patch, path", [
    ({"kind": "spline"}, "kind"),
    ({"seed": -1}, "seed"),
    ({"samples": 0}, "samples"),
    ({"groups": []}, "groups"),
    ({"scheme": {"name": "rk4"}}, "scheme.name"),
    ({"unexpected": True}, "unexpected"),
])
def test_invalid_fields_have_paths(small_config, patch, path):
    """Test one field.path diagnostic per schema problem."""
    data = dict(small_config, **patch)
    with pytest.raises(ConfigError) as excinfo:
        parse_experiment_config(data)
    assert any(line.startswith(f"{path}:") for line in excinfo.value.diagnostics)


def test_scheme_needs_step_or_tolerance(small_config):
    """Test that a scheme without step and tolerance is rejected."""
    with pytest.raises(ConfigError):
        parse_experiment_config(dict(small_config, scheme={"name": "midpoint", "step": None}))


def test_unknown_group_rejected(small_config):
    """Test that group names are resolved during validation."""
    with pytest.raises(ConfigError) as excinfo:
        parse_experiment_config(dict(small_config, groups=[{"name": "sp4"}]))
    assert "sp4" in str(excinfo.value.diagnostics)


def test_curve_descriptors(small_config):
    """Test constant, polynomial, fourier and piecewise descriptors."""
    curves = [
        {"kind": "constant", "value": [1.0, 2.0]},
        {"kind": "polynomial", "coefficients": [[0.0, 1.0], [1.0, 0.0]]},
        {"kind": "fourier", "mean": [0.0, 0.0], "cos": [[1.0, 0.0]], "sin": [[0.0, 1.0]]},
        {"kind": "piecewise", "breakpoints": [0.0, 0.5, 1.0],
         "segments": [{"kind": "constant", "value": [1.0, 0.0]}, {"kind": "constant", "value": [0.0, 1.0]}]},
    ]
    config = parse_experiment_config(dict(small_config, curves=curves))
    built = [c.to_curve() for c in config.curves]
    np.testing.assert_allclose(built[0](0.3), [1.0, 2.0])
    np.testing.assert_allclose(built[1](0.5), [0.5, 1.0])
    np.testing.assert_allclose(built[2](0.0), [1.0, 0.0], atol=1e-15)
    assert isinstance(built[3], PiecewiseCurve)
    np.testing.assert_allclose(built[3](0.75), [0.0, 1.0])


def test_curve_descriptor_errors(small_config):
    """Test ragged coefficients, bad tilings and dimension mismatches."""
    bad = [
        {"kind": "polynomial", "coefficients": [[0.0, 1.0], [1.0]]},
        {"kind": "piecewise", "breakpoints": [0.0, 1.0, 0.5],
         "segments": [{"kind": "constant", "value": [1.0, 0.0]}, {"kind": "constant", "value": [0.0, 1.0]}]},
        {"kind": "constant", "value": [1.0, 2.0, 3.0]},
        {"kind": "constant", "value": [1.0, 2.0], "interval": [1.0, 0.0]},
    ]
    for curve in bad:
        with pytest.raises(ConfigError):
            parse_experiment_config(dict(small_config, curves=[curve]))


def test_load_reports_json_position(write_config):
    """Test that JSON syntax errors carry line and column."""
    path = write_config('{\n  "kind": "evolve",\n  "groups": [\n}', name="broken.json")
    with pytest.raises(ConfigError) as excinfo:
        load_experiment_config(path)
    assert excinfo.value.diagnostics[0].startswith("line 4, column 1")


def test_load_rejects_non_objects_and_missing_files(write_config, tmp_path):
    """Test top-level arrays and unreadable paths."""
    with pytest.raises(ConfigError):
        load_experiment_config(write_config([1, 2, 3], name="array.json"))
    with pytest.raises(ConfigError):
        load_experiment_config(tmp_path / "missing.json")


def test_shipped_configs_are_valid():
    """Test that every config under configs/ validates."""
    paths = sorted(Path(__file__).resolve().parent.parent.joinpath("configs").glob("*.json"))
    assert paths
    kinds = {load_experiment_config(path).kind for path in paths}
    assert kinds == set(EXPERIMENT_KINDS)
