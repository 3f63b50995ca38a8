"""
Tests for product-integral evolutions and the identity residual checks.
"""
# pylint: disable=redefined-outer-name
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.curves import ConstantCurve, PiecewiseCurve, PolynomialCurve, from_curve, piecewise_constant
from src.evolution import (EvolutionResult, abelian_closed_form_residual, concat_residual, convergence_orders,
                           evolve, evolve_piecewise, get_scheme, grid_der, hom_transport_residual,
                           inverse_identity_residual, product_identity_residual, quotient_identity_residual,
                           reconstruct_residual, reverse, reverse_residual, substitution_check)
from src.exceptions import ContractViolation, StepLimitError
from src.groups import make_group, make_homomorphism
from src.lcvs import riemann_integral
from src.lcvs.sampling import monotone_reparam
from src.models.evolve_config import EvolveConfig

FACTOR = 5.0
FLOOR = 1e-11


@pytest.fixture
def phi(wobble3):
    """Provide a moderate so3/su2 integrand."""
    return wobble3.scaled(0.8)


@pytest.fixture
def psi(line3):
    """Provide a second integrand."""
    return line3.scaled(-1.5)


def test_constant_integrand_is_exact(so3):
    """Test that constant integrands evolve by the exponential."""
    x = np.array([0.4, -0.3, 0.2])
    result = evolve(so3, ConstantCurve(x), EvolveConfig(step=0.25))
    assert isinstance(result, EvolutionResult)
    assert result.validate()
    assert result.steps == 4
    np.testing.assert_allclose(result.endpoint, so3.exp(x), atol=1e-14)
    np.testing.assert_allclose(result.at(0.3), so3.exp(0.3 * x), atol=1e-14)
    assert result.estimate == 0.0


def test_abelian_midpoint_is_midpoint_rule(abelian2):
    """Test that an abelian evolution sums the integrand at midpoints."""
    phi = PolynomialCurve([[1.0, 0.0], [0.0, 2.0], [3.0, 0.0]])
    result = evolve(abelian2, phi, EvolveConfig("midpoint", 0.5))
    np.testing.assert_allclose(result.endpoint, [1.0 + 3 * (0.25 ** 2 + 0.75 ** 2) / 2, 1.0], atol=1e-14)


def test_richardson_estimate_tracks_error(so3, phi, midpoint_cfg):
    """Test that the h/2 estimate bounds the actual endpoint error."""
    result = evolve(so3, phi, midpoint_cfg)
    oracle = evolve(so3, phi, midpoint_cfg.with_step(2.0 ** -12)).endpoint
    error = so3.distance(result.endpoint, oracle)
    assert error <= 5 * result.estimate


def test_evolve_to_tolerance(so3, phi):
    """Test the adaptive halving until the estimate meets the target."""
    result = evolve(so3, phi, EvolveConfig("midpoint", None, 1e-6))
    assert result.estimate <= 1e-6


def test_step_limit(so3, phi):
    """Test that too many steps raise StepLimitError."""
    with pytest.raises(StepLimitError):
        evolve(so3, phi, EvolveConfig(step=1e-3, max_steps=10))


def test_dimension_mismatch(so3):
    """Test that an integrand of the wrong dimension is rejected."""
    with pytest.raises(ContractViolation):
        evolve(so3, ConstantCurve([1.0, 2.0]))


def test_evolve_config():
    """Test validation, step counts and dict conversion."""
    cfg = EvolveConfig("lie_euler", 0.3)
    assert cfg.validate()
    assert cfg.steps_for(1.0) == 4
    assert EvolveConfig.from_dict(cfg.to_dict()) == cfg
    assert not EvolveConfig("rk4", 0.1).validate()
    assert not EvolveConfig("midpoint", None, None).validate()
    with pytest.raises(ContractViolation):
        EvolveConfig.from_dict({"scheme": "midpoint", "step": -1.0})


def test_schemes():
    """Test scheme lookup, nodes and linear steps."""
    euler, midpoint = get_scheme("lie_euler"), get_scheme("midpoint")
    assert (euler.order, midpoint.order) == (1, 2)
    assert float(midpoint.node(0.0, 0.5)) == 0.25
    assert euler.linear_step(lambda t, y: -y, 0.0, np.array([1.0]), 0.1)[0] == pytest.approx(0.9)
    assert midpoint.linear_step(lambda t, y: -y, 0.0, np.array([1.0]), 0.1)[0] == pytest.approx(0.905)
    with pytest.raises(ContractViolation):
        get_scheme("rk4")


def test_piecewise_constant_is_exact(so3):
    """Test that step integrands give the product of exponentials."""
    values = [[0.3, 0.0, 0.1], [0.0, -0.5, 0.2], [0.4, 0.4, 0.0]]
    pw = piecewise_constant([0.0, 0.2, 0.7, 1.0], values)
    result = evolve(so3, pw)
    direct = np.eye(3)
    for v, a, b in zip(values, [0.0, 0.2, 0.7], [0.2, 0.7, 1.0]):
        direct = so3.exp((b - a) * np.array(v)) @ direct
    assert so3.distance(result.endpoint, direct) <= 1e-13


def test_evolve_piecewise_keeps_breakpoints(so3, midpoint_cfg):
    """Test that segment boundaries are grid nodes and constant segments carry no estimate."""
    pw = piecewise_constant([0.0, 0.25, 1.0], [[0.3, 0.0, 0.1], [0.0, -0.5, 0.2]])
    result = evolve_piecewise(so3, pw, midpoint_cfg)
    assert result.times[0] == 0.0
    assert result.times[-1] == 1.0
    assert np.any(np.isclose(result.times, 0.25, atol=1e-15))
    assert np.all(np.diff(result.times) > 0)
    assert result.estimate == 0.0


def test_convergence_orders(so3, phi):
    """Test the observed orders of both schemes."""
    ladder = [2.0 ** -k for k in range(4, 8)]
    for scheme, expected in (("lie_euler", 1.0), ("midpoint", 2.0)):
        data = convergence_orders(so3, phi, scheme, ladder, 2.0 ** -12)
        assert data["order"] == pytest.approx(expected, abs=0.2)
        assert data["pairwise"].shape == (3,)


def test_reconstruction(so3, phi, midpoint_cfg):
    """Test Der(int phi) = phi on the grid."""
    assert reconstruct_residual(so3, phi, midpoint_cfg) <= 1e-3


def test_reconstruction_on_unequal_segments(so3, phi, midpoint_cfg):
    """Test Der(int phi) = phi when phi is split at an off-grid point."""
    assert reconstruct_residual(so3, from_curve(phi, [0.0, 0.3001, 1.0]), midpoint_cfg) <= 1e-4
    assert reconstruct_residual(so3, from_curve(phi, [0.0, 0.01, 1.0]), midpoint_cfg) <= 1e-4


def test_grid_der_per_segment(so3, phi, midpoint_cfg):
    """Test grid derivatives on a segment of exactly four steps and at the breakpoint after it."""
    cut = 4 * 2.0 ** -7
    result = evolve_piecewise(so3, from_curve(phi, [0.0, cut, 1.0]), midpoint_cfg)
    assert result.segments[0] == (0, 4)
    der = grid_der(so3, result)
    assert der.shape == (result.steps + 1, 3)
    np.testing.assert_allclose(der[4], phi(cut), atol=1e-4)
    short = evolve_piecewise(so3, from_curve(phi, [0.0, 2.0 ** -6, 1.0]), midpoint_cfg)
    with pytest.raises(ContractViolation):
        grid_der(so3, short)


def test_grid_der_needs_four_steps(so3, phi):
    """Test the step requirement of grid derivatives."""
    result = evolve(so3, phi, EvolveConfig(step=0.5))
    with pytest.raises(ContractViolation):
        grid_der(so3, result)


def test_concatenation_and_reversal(so3, phi, midpoint_cfg):
    """Test concatenation over a breakpoint and the reversed integrand."""
    assert concat_residual(so3, phi, [0.0, 0.4, 1.0], midpoint_cfg).within(FACTOR, FLOOR)
    assert reverse_residual(so3, phi, midpoint_cfg).within(FACTOR, FLOOR)
    np.testing.assert_allclose(reverse(phi)(0.25), -phi(0.75))


def test_substitution(so3, phi, midpoint_cfg):
    """Test the substitution rule for a monotone reparametrization."""
    rho = monotone_reparam(0.4, (0.0, 1.0), (0.0, 1.0))
    assert substitution_check(so3, phi, rho, midpoint_cfg).within(FACTOR, FLOOR)


def test_product_quotient_inverse(so3, phi, psi, midpoint_cfg):
    """Test the pointwise product, quotient and inverse rules."""
    assert product_identity_residual(so3, phi, psi, midpoint_cfg).within(FACTOR, FLOOR)
    assert quotient_identity_residual(so3, phi, psi, midpoint_cfg).within(FACTOR, FLOOR)
    assert inverse_identity_residual(so3, phi, midpoint_cfg).within(FACTOR, FLOOR)


def test_identities_on_unequal_segments(so3, phi, psi, midpoint_cfg):
    """Test the pointwise rules, reversal and transport for a curve split at an off-grid point."""
    split = from_curve(phi, [0.0, 0.3001, 1.0])
    assert product_identity_residual(so3, split, psi, midpoint_cfg).within(FACTOR, FLOOR)
    assert product_identity_residual(so3, psi, split, midpoint_cfg).within(FACTOR, FLOOR)
    assert quotient_identity_residual(so3, split, psi, midpoint_cfg).within(FACTOR, FLOOR)
    assert inverse_identity_residual(so3, split, midpoint_cfg).within(FACTOR, FLOOR)
    assert reverse_residual(so3, split, midpoint_cfg).within(FACTOR, FLOOR)
    assert hom_transport_residual(split, make_homomorphism("su2->so3"), midpoint_cfg).within(FACTOR, FLOOR)


def test_reverse_keeps_right_continuity():
    """Test that a reversed step curve takes the value of the segment starting at each breakpoint."""
    pw = piecewise_constant([0.0, 0.25, 1.0], [[0.3, 0.0, 0.1], [0.0, -0.5, 0.2]])
    rev = reverse(pw)
    assert isinstance(rev, PiecewiseCurve)
    np.testing.assert_allclose(rev.breakpoints, [0.0, 0.75, 1.0])
    np.testing.assert_allclose(rev(0.5), [0.0, 0.5, -0.2])
    np.testing.assert_allclose(rev(0.75), [-0.3, 0.0, -0.1])
    np.testing.assert_allclose(rev(0.9), [-0.3, 0.0, -0.1])


def test_identities_to_tolerance(so3, phi, psi):
    """Test residual operations with only a target tolerance configured."""
    cfg = EvolveConfig("midpoint", None, 1e-6)
    assert reconstruct_residual(so3, phi, cfg) <= 1e-3
    assert concat_residual(so3, phi, [0.0, 0.4, 1.0], cfg).within(FACTOR, FLOOR)
    assert product_identity_residual(so3, phi, psi, cfg).within(FACTOR, FLOOR)
    assert inverse_identity_residual(so3, phi, cfg).within(FACTOR, FLOOR)


def test_homomorphism_transport(phi, midpoint_cfg):
    """Test that the double cover commutes with product integration."""
    residual = hom_transport_residual(phi, make_homomorphism("su2->so3"), midpoint_cfg)
    assert residual.residual <= FLOOR


def test_abelian_closed_form(abelian2, so3):
    """Test int phi = exp(int phi(s) ds) on an abelian group."""
    phi = PolynomialCurve([[0.2, -0.1], [0.5, 0.3], [-0.4, 0.2], [0.1, 0.1]])
    assert abelian_closed_form_residual(abelian2, phi, EvolveConfig("midpoint", 2.0 ** -10)) <= 1e-10
    assert abelian_closed_form_residual(abelian2, phi, EvolveConfig("lie_euler", 2.0 ** -10)) <= 1e-6
    with pytest.raises(ContractViolation):
        abelian_closed_form_residual(so3, ConstantCurve([0.1, 0.0, 0.0]))


@settings(max_examples=25, deadline=None)
@given(st.lists(st.floats(min_value=-3.0, max_value=3.0, allow_nan=False), min_size=3, max_size=3))
def test_abelian_step_curves_sum(values):
    """Test that abelian evolutions of step curves equal their integral."""
    group = make_group("abelian(1)")
    pw = piecewise_constant([0.0, 0.25, 0.5, 1.0], [[v] for v in values])
    endpoint = evolve(group, pw).endpoint
    np.testing.assert_allclose(endpoint, riemann_integral(pw), atol=1e-12)
