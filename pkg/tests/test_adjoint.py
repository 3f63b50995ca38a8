"""
Tests for ad-power series, adjoint transport and the Groenwall bounds.
"""
import numpy as np
import pytest

from src.adjoint import (ad_exp_residual, ad_series, constricted_probe, dexp_factor, dexp_factor_series,
                         groenwall_check, groenwall_scalar_check, groenwall_scalar_family, omori_converse_residual,
                         omori_transport, submultiplicativity_violation)
from src.curves import from_curve
from src.evolution import evolve
from src.exceptions import ContractViolation, SeriesConvergenceError
from src.models.evolve_config import EvolveConfig
from src.models.vector_spec import max_seminorm


def test_ad_series_matches_adjoint(matrix_group, rng):
    """Test sum t^n/n! ad_X^n(Y) = Ad_{exp(tX)}(Y)."""
    x, y = 0.05 * rng.standard_normal((2, matrix_group.dim))
    assert ad_exp_residual(matrix_group, x, y) <= 1e-12
    assert ad_exp_residual(matrix_group, x, y, t=0.5) <= 1e-12
    assert ad_series(matrix_group, x, y).validate()


def test_ad_series_large_so3(so3):
    """Test convergence on a large rotation generator."""
    x, y = np.array([1.5, -2.0, 0.5]), np.array([0.3, 0.1, -0.4])
    assert ad_exp_residual(so3, x, y) <= 1e-12


def test_ad_series_terminates_on_nilpotent(heisenberg):
    """Test that the Heisenberg series stops exactly after one bracket."""
    result = ad_series(heisenberg, [1.0, 0.0, 0.0], [0.0, 1.0, 0.0])
    assert result.exact
    assert result.terms == 2
    np.testing.assert_allclose(result.value, [0.0, 1.0, 1.0])
    assert ad_series(heisenberg, [1.0, 0.0, 0.0], [0.0, 0.0, 0.0]).exact


def test_ad_series_term_cap(so3):
    """Test SeriesConvergenceError when the term cap is too small."""
    with pytest.raises(SeriesConvergenceError) as excinfo:
        ad_series(so3, [2.0, 1.0, 0.0], [0.0, 0.0, 1.0], max_terms=3)
    assert excinfo.value.terms == 3


def test_dexp_factor_is_left_trivialized_dexp(matrix_group, rng):
    """Test (1 - exp(-ad X)) / ad X (Z) = Ad_{exp(-X)} dexp_right(X, Z)."""
    x, z = 0.05 * rng.standard_normal((2, matrix_group.dim))
    expected = matrix_group.Ad(matrix_group.exp(-x), matrix_group.dexp_right(x, z))
    np.testing.assert_allclose(dexp_factor(matrix_group, x, z), expected, atol=1e-12)
    np.testing.assert_allclose(dexp_factor(matrix_group, np.zeros(matrix_group.dim), z), z, atol=1e-15)
    assert not dexp_factor_series(matrix_group, x, z).exact or matrix_group.nilpotent


def test_omori_transport(so3, wobble3, midpoint_cfg):
    """Test that alpha' = [phi, alpha] is solved by Ad_{int phi}(Y)."""
    y = np.array([0.2, -0.5, 0.3])
    result = omori_transport(so3, wobble3, y, midpoint_cfg)
    assert result.values.shape == (result.times.size, 3)
    assert result.residual <= 5 * result.estimate + 1e-11
    np.testing.assert_allclose(result.curve(0.0), y, atol=1e-14)


def test_omori_converse(so3, wobble3, midpoint_cfg):
    """Test that Ad_mu(Y) along a computed evolution satisfies the transport equation."""
    mu = evolve(so3, wobble3, midpoint_cfg)
    assert omori_converse_residual(so3, mu, [0.2, -0.5, 0.3]) <= 1e-3


def test_omori_transport_to_tolerance(so3, wobble3):
    """Test the transport with only a target tolerance configured."""
    y = np.array([0.2, -0.5, 0.3])
    result = omori_transport(so3, wobble3, y, EvolveConfig("midpoint", None, 1e-6))
    assert result.times.size > 17
    assert result.residual <= 5 * result.estimate + 1e-11


def test_omori_on_unequal_segments(so3, wobble3, midpoint_cfg):
    """Test transport and its converse on a curve split at an off-grid breakpoint."""
    y = np.array([0.2, -0.5, 0.3])
    split = from_curve(wobble3, [0.0, 0.3001, 1.0])
    result = omori_transport(so3, split, y, midpoint_cfg)
    assert np.any(np.isclose(result.times, 0.3001, atol=1e-15))
    assert result.residual <= 5 * result.estimate + 1e-11
    mu = evolve(so3, split, midpoint_cfg)
    assert len(mu.segments) == 2
    assert omori_converse_residual(so3, mu, y) <= 1e-3


def test_submultiplicativity(so3, rng):
    """Test the euclidean norm on so3 and a violating max norm."""
    assert submultiplicativity_violation(so3, so3.submultiplicative, rng) <= 1e-14
    assert submultiplicativity_violation(so3, max_seminorm(), rng) > 0.0


def test_groenwall_bound(so3, heisenberg, wobble3, midpoint_cfg):
    """Test w(Ad_mu Y) <= exp(int w(phi)) w(Y) pointwise."""
    for group in (so3, heisenberg):
        report = groenwall_check(group, wobble3, [0.2, -0.5, 0.3], cfg=midpoint_cfg)
        assert report.passed
        assert report.min_slack >= -1e-8


def test_groenwall_rejects_non_submultiplicative(so3, wobble3, midpoint_cfg):
    """Test that the check refuses a seminorm failing w([X,Y]) <= w(X) w(Y)."""
    with pytest.raises(ContractViolation):
        groenwall_check(so3, wobble3, [1.0, 0.0, 0.0], w=max_seminorm(), cfg=midpoint_cfg)


def test_scalar_groenwall():
    """Test the scalar lemma on generated families."""
    rng = np.random.default_rng(7)
    for _ in range(5):
        t, alpha, beta, c = groenwall_scalar_family(rng)
        report = groenwall_scalar_check(t, alpha, beta, c)
        assert report.passed


def test_scalar_groenwall_detects_violation():
    """Test that a family breaking the hypothesis is reported."""
    t = np.linspace(0.0, 1.0, 257)
    report = groenwall_scalar_check(t, np.full_like(t, 2.0), np.zeros_like(t), 1.0)
    assert report.hypothesis_violation == pytest.approx(1.0)
    assert not report.passed


def test_constricted_probe_so3(so3):
    """Test that unit basis generators are constricted with C = 1."""
    c, report = constricted_probe(so3, list(np.eye(3)), n_max=4, samples=20)
    assert c == pytest.approx(1.0)
    assert report.extra["C_1"] == pytest.approx(1.0)
    assert report.witness is not None


def test_constricted_probe_heisenberg(heisenberg):
    """Test that two-fold ad-compositions vanish on heisenberg3."""
    c, report = constricted_probe(heisenberg, list(np.eye(3)), n_max=3, samples=20)
    assert report.extra["C_2"] == 0.0
    assert report.extra["C_3"] == 0.0
    assert c == pytest.approx(report.extra["C_1"])
    with pytest.raises(ContractViolation):
        constricted_probe(heisenberg, [])


def test_constricted_constant_reports_excess(so3):
    """Test that the report measures ||ad_{X_1} ... ad_{X_n}|| - C^n over the sampled tuples."""
    basis = list(np.eye(3))
    c, tight = constricted_probe(so3, basis, n_max=3, samples=20)
    assert abs(tight.max_violation) <= 1e-12
    assert tight.passed
    declared, loose = constricted_probe(so3, basis, n_max=3, samples=20, c=2.0)
    assert declared == 2.0
    assert loose.max_violation == pytest.approx(-1.0)
    assert loose.extra["C"] == pytest.approx(c)
    _, short = constricted_probe(so3, basis, n_max=3, samples=20, c=0.5)
    assert short.max_violation >= 0.4
    assert not short.passed
    with pytest.raises(ContractViolation):
        constricted_probe(so3, basis, c=-1.0)
