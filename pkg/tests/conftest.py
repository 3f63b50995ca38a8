"""
Pytest configuration and shared fixtures for all tests.
"""
# pylint: disable=redefined-outer-name
import json

import numpy as np
import pytest

from src.config.settings import get_settings
from src.curves import FourierCurve, PolynomialCurve
from src.groups import make_group
from src.loaders.report_writer import ReportWriter
from src.models.evolve_config import EvolveConfig


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """Run every test with default settings, independent of the caller's environment."""
    for key in ("PRODINT_THREADS", "PRODINT_LOG_LEVEL", "PRODINT_RESIDUAL_FLOOR"):
        monkeypatch.delenv(key, raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def rng():
    """Provide a seeded random generator."""
    return np.random.default_rng(12345)


@pytest.fixture
def so3():
    """Provide the rotation group."""
    return make_group("so3")


@pytest.fixture
def su2():
    """Provide SU(2)."""
    return make_group("su2")


@pytest.fixture
def heisenberg():
    """Provide the 3-dimensional Heisenberg group."""
    return make_group("heisenberg3")


@pytest.fixture
def abelian2():
    """Provide (R^2, +)."""
    return make_group("abelian(2)")


@pytest.fixture
def torus2():
    """Provide the 2-torus."""
    return make_group("torus(2)")


@pytest.fixture
def unit2():
    """Provide the unit group of 2 x 2 matrices."""
    return make_group("unit_group(2)")


@pytest.fixture(params=["so3", "su2", "heisenberg3", "gl(2)"])
def matrix_group(request):
    """Provide each non-abelian matrix group in turn."""
    return make_group(request.param)


@pytest.fixture
def midpoint_cfg():
    """Provide a midpoint evolution config with step 2^-7."""
    return EvolveConfig("midpoint", 2.0 ** -7)


@pytest.fixture
def euler_cfg():
    """Provide a Lie-Euler evolution config with step 2^-9."""
    return EvolveConfig("lie_euler", 2.0 ** -9)


@pytest.fixture
def wobble3():
    """Provide a smooth 3-dimensional trigonometric curve on [0, 1]."""
    return FourierCurve(mean=[0.3, -0.2, 0.1],
                        cos_coefficients=[[0.2, 0.1, -0.3]],
                        sin_coefficients=[[-0.1, 0.25, 0.15]])


@pytest.fixture
def line3():
    """Provide the affine curve t -> (0.2 + 0.3 t, -0.4 t, 0.1) on [0, 1]."""
    return PolynomialCurve([[0.2, 0.0, 0.1], [0.3, -0.4, 0.0]])


@pytest.fixture
def report_dir(tmp_path):
    """Provide a temporary report directory path."""
    return str(tmp_path / "reports")


@pytest.fixture
def report_writer(report_dir):
    """Provide an initialized ReportWriter in a temporary directory."""
    writer = ReportWriter(report_dir)
    writer.initialize()
    return writer


@pytest.fixture
def write_config(tmp_path):
    """Provide a helper writing a config dict (or raw text) to a JSON file."""
    def write(data, name="config.json"):
        path = tmp_path / name
        path.write_text(data if isinstance(data, str) else json.dumps(data), encoding="utf-8")
        return str(path)
    return write


@pytest.fixture
def small_config(report_dir):
    """Provide a small, fast identities config as a dict."""
    return {
        "schema_version": "1",
        "kind": "identities",
        "groups": [{"name": "abelian", "n": 2}],
        "samples": 1,
        "seed": 3,
        "scheme": {"name": "midpoint", "step": 0.015625},
        "output": {"directory": report_dir},
    }
