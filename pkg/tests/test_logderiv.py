"""
Tests for group curves and the right logarithmic derivative.
"""
# pylint: disable=redefined-outer-name
import numpy as np
import pytest

from src.curves import FunctionCurve
from src.exceptions import ContractViolation, InversionError
from src.groups import make_group
from src.lcvs.sampling import random_monotone_reparam
from src.logderiv import (ANALYTIC_TOL, FINITE_DIFFERENCE_TOL, GroupCurve, der, der_at, exp_curve,
                          inverse_rule_residual, left_translation_residual, one_parameter_curve,
                          product_rule_residual, quotient_rule_residual, residual_tolerance,
                          right_translation_gap, right_translation_residual, sampled_group_curve,
                          substitution_rule_residual)

POINTS = 33


@pytest.fixture
def mu_nu(matrix_group, wobble3, line3):
    """Provide two analytic group curves exp(f), exp(g) on [0, 1]."""
    d = matrix_group.dim
    f = wobble3 if d == 3 else FunctionCurve(lambda t, s: np.tile(wobble3.evaluate(t, s)[:, :1], (1, d)), d, order=8)
    g = line3 if d == 3 else FunctionCurve(lambda t, s: np.tile(line3.evaluate(t, s)[:, 1:2], (1, d)), d, order=8)
    return exp_curve(matrix_group, f.scaled(0.5), "exp(f)"), exp_curve(matrix_group, g.scaled(0.5), "exp(g)")


def test_one_parameter_subgroup_has_constant_der(so3):
    """Test Der(exp(tX)) = X with the analytic tangent."""
    x = np.array([0.3, -0.2, 0.5])
    mu = one_parameter_curve(so3, x)
    assert mu.has_tangent
    for t in (0.0, 0.4, 1.0):
        np.testing.assert_allclose(der_at(mu, t), x, atol=1e-12)


def test_finite_difference_der_without_tangent(so3):
    """Test the difference-quotient Der inside and at both ends."""
    x = np.array([0.3, -0.2, 0.5])
    mu = GroupCurve(so3, 0.0, 1.0, lambda t: so3.exp(t * x))
    assert not mu.has_tangent
    for t in (0.0, 0.5, 1.0):
        np.testing.assert_allclose(der_at(mu, t), x, atol=1e-8)
    assert residual_tolerance(mu) == FINITE_DIFFERENCE_TOL
    assert residual_tolerance(one_parameter_curve(so3, x)) == ANALYTIC_TOL


def test_der_curve(so3):
    """Test Der as an algebra-valued curve of order 0."""
    x = np.array([0.1, 0.0, -0.2])
    curve = der(one_parameter_curve(so3, x))
    assert curve.order == 0
    np.testing.assert_allclose(curve(np.array([0.2, 0.8])), np.tile(x, (2, 1)), atol=1e-12)


def test_der_needs_c1_curve(so3):
    """Test that Der rejects curves of order 0."""
    mu = GroupCurve(so3, 0.0, 1.0, lambda t: np.eye(3), order=0)
    with pytest.raises(ContractViolation):
        der(mu)


def test_der_reports_singular_time():
    """Test that a singular value raises InversionError carrying t."""
    gl2 = make_group("gl(2)")
    mu = GroupCurve(gl2, 0.0, 1.0, lambda t: np.diag([t, 1.0]))
    with pytest.raises(InversionError) as excinfo:
        der_at(mu, 0.0)
    assert excinfo.value.t == 0.0


def test_product_inverse_quotient_rules(mu_nu):
    """Test the algebraic rules of Der on analytic curves."""
    mu, nu = mu_nu
    assert product_rule_residual(mu, nu, POINTS) <= ANALYTIC_TOL
    assert inverse_rule_residual(mu, POINTS) <= ANALYTIC_TOL
    assert quotient_rule_residual(mu, nu, POINTS) <= ANALYTIC_TOL


def test_substitution_rule(mu_nu, rng):
    """Test Der(mu o rho) = rho' Der(mu) o rho."""
    mu, _ = mu_nu
    rho = random_monotone_reparam(rng)
    assert substitution_rule_residual(mu, rho, POINTS) <= ANALYTIC_TOL


def test_translation_rules(mu_nu):
    """Test Der(h mu) = Ad_h Der(mu) and Der(mu h) = Der(mu)."""
    mu, nu = mu_nu
    h = nu(0.7)
    assert left_translation_residual(mu, h, POINTS) <= ANALYTIC_TOL
    assert right_translation_residual(mu, h, POINTS) <= ANALYTIC_TOL
    der_gap, curve_gap = right_translation_gap(mu, mu.right_translate(h), POINTS)
    assert der_gap <= ANALYTIC_TOL
    assert curve_gap <= 1e-10


def test_curves_must_share_group_and_interval(so3, su2):
    """Test that pointwise products need compatible curves."""
    a = one_parameter_curve(so3, [0.1, 0.0, 0.0])
    with pytest.raises(ContractViolation):
        a.product(one_parameter_curve(su2, [0.1, 0.0, 0.0]))
    with pytest.raises(ContractViolation):
        a.product(one_parameter_curve(so3, [0.1, 0.0, 0.0], 0.0, 2.0))


def test_sampled_group_curve_interpolates(so3):
    """Test that a sampled curve passes through its nodes."""
    times = np.linspace(0.0, 1.0, 5)
    elements = np.stack([so3.exp([0.2 * t, -0.1 * t, 0.3 * t * t]) for t in times])
    mu = sampled_group_curve(so3, times, elements)
    for t, g in zip(times, elements):
        np.testing.assert_allclose(mu(t), g, atol=1e-14)
    midway = mu(0.125)
    assert so3.validate_element(midway)


def test_sampled_group_curve_follows_chart_lines(unit2):
    """Test that with chart a -> a - 1 the curve between nodes is a chart line, not exp(s X)."""
    x = np.array([0.3, -0.2, 0.1, 0.2])
    g = unit2.exp(x)
    mu = sampled_group_curve(unit2, np.array([0.0, 1.0]), np.stack([unit2.identity(), g]))
    midway = mu(0.5)
    np.testing.assert_allclose(midway, unit2.identity() + 0.5 * (g - unit2.identity()), atol=1e-14)
    assert np.max(np.abs(midway - unit2.exp(0.5 * x))) > 1e-4
