"""
Tests for algebra-valued curves, combinators, piecewise curves and jets.
"""
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.curves import (ConstantCurve, FourierCurve, FunctionCurve, LinearCombination, PiecewiseCurve,
                        PolynomialCurve, ReparametrizedCurve, SplineCurve, from_curve, piecewise_constant,
                        zero_curve)
from src.curves.jets import compose_derivatives, exp_derivatives, product_derivatives
from src.exceptions import ContractViolation

coefficient = st.floats(min_value=-2.0, max_value=2.0, allow_nan=False, allow_infinity=False)
times = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)


def test_polynomial_values(line3):
    """Test that a polynomial curve evaluates its coefficients in (t - origin)."""
    np.testing.assert_allclose(line3(0.5), [0.35, -0.2, 0.1])
    np.testing.assert_allclose(line3.evaluate(0.5, 1), [0.3, -0.4, 0.0])
    np.testing.assert_allclose(line3.evaluate(0.5, 2), [0.0, 0.0, 0.0])


def test_scalar_and_array_shapes(line3):
    """Test that scalar times give (d,) and arrays give (n, d)."""
    assert line3(0.3).shape == (3,)
    assert line3(np.linspace(0, 1, 5)).shape == (5, 3)


def test_order_contract_enforced():
    """Test that derivatives beyond the declared order are rejected."""
    c = FunctionCurve(lambda t, s: t[:, None], 1, order=1)
    c.evaluate(0.5, 1)
    with pytest.raises(ContractViolation):
        c.evaluate(0.5, 2)


def test_interval_must_be_increasing():
    """Test that empty or reversed intervals are rejected."""
    with pytest.raises(ContractViolation):
        ConstantCurve([1.0], 1.0, 1.0)
    with pytest.raises(ValueError):
        ConstantCurve([1.0], 1.0, 0.0)


def test_fourier_derivatives_consistent(wobble3):
    """Test that analytic Fourier derivatives agree with finite differences."""
    for s in range(3):
        assert wobble3.derivative_consistency_error(s) < 1e-7


def test_constant_curve_derivatives_vanish():
    """Test that a constant curve has zero derivatives."""
    c = ConstantCurve([1.0, -2.0], 0.0, 2.0)
    np.testing.assert_allclose(c(1.5), [1.0, -2.0])
    np.testing.assert_allclose(c.evaluate(1.5, 3), [0.0, 0.0])
    assert zero_curve(3).dim == 3


def test_reversed_curve(line3):
    """Test that reversal negates and mirrors the curve."""
    rev = line3.reversed()
    np.testing.assert_allclose(rev(0.2), -line3(0.8))
    np.testing.assert_allclose(rev.evaluate(0.2, 1), line3.evaluate(0.8, 1))


def test_linear_combination_and_derivative(wobble3, line3):
    """Test sums, differences and derivative curves."""
    combo = wobble3 + line3.scaled(2.0)
    np.testing.assert_allclose(combo(0.4), wobble3(0.4) + 2 * line3(0.4))
    np.testing.assert_allclose((wobble3 - wobble3)(0.7), np.zeros(3), atol=1e-15)
    np.testing.assert_allclose(wobble3.derivative(2)(0.3), wobble3.evaluate(0.3, 2))


def test_linear_combination_rejects_mismatch(line3):
    """Test that curves on different intervals cannot be combined."""
    other = PolynomialCurve([[0.0, 0.0, 0.0]], 0.0, 2.0)
    with pytest.raises(ContractViolation):
        LinearCombination([line3, other], [1.0, 1.0])


def test_restrict_outside_interval_rejected(line3):
    """Test that restriction must stay inside the domain."""
    assert line3.restrict(0.25, 0.5).interval == (0.25, 0.5)
    with pytest.raises(ContractViolation):
        line3.restrict(0.5, 1.5)


def test_weighted_reparametrization_chain_rule(wobble3):
    """Test that rho' (c o rho) has the chain-rule derivative."""
    rho = PolynomialCurve([[0.0], [2.0]], 0.0, 0.5)
    psi = ReparametrizedCurve(wobble3, rho, weighted=True)
    np.testing.assert_allclose(psi(0.2), 2 * wobble3(0.4), atol=1e-14)
    np.testing.assert_allclose(psi.evaluate(0.2, 1), 4 * wobble3.evaluate(0.4, 1), atol=1e-12)
    np.testing.assert_allclose(psi.evaluate(0.2, 2), 8 * wobble3.evaluate(0.4, 2), atol=1e-11)


def test_piecewise_right_continuity():
    """Test that breakpoints belong to the segment starting there."""
    pw = piecewise_constant([0.0, 0.5, 1.0], [[1.0], [2.0]])
    assert pw(0.25)[0] == 1.0
    assert pw(0.5)[0] == 2.0
    assert pw(1.0)[0] == 2.0
    np.testing.assert_allclose(pw.jumps(0), [1.0])


def test_piecewise_validation():
    """Test that inconsistent breakpoints and segments are rejected."""
    with pytest.raises(ContractViolation):
        PiecewiseCurve([0.0, 0.5, 1.0], [ConstantCurve([1.0], 0.0, 0.5)])
    with pytest.raises(ContractViolation):
        PiecewiseCurve([0.0, 1.0, 0.5], [ConstantCurve([1.0], 0.0, 1.0), ConstantCurve([1.0], 1.0, 1.5)])
    with pytest.raises(ContractViolation):
        PiecewiseCurve([0.0, 0.5, 1.0], [ConstantCurve([1.0], 0.0, 0.5), ConstantCurve([1.0, 2.0], 0.5, 1.0)])


def test_refine_and_restrict_keep_values(wobble3):
    """Test that refinement and restriction do not change the curve."""
    pw = from_curve(wobble3, [0.0, 0.5, 1.0])
    refined = pw.refine(0.3)
    assert refined.count == 3
    t = np.linspace(0.0, 1.0, 11)
    np.testing.assert_allclose(refined(t), wobble3(t))
    part = pw.restrict(0.25, 0.75)
    np.testing.assert_allclose(part.breakpoints, [0.25, 0.5, 0.75])
    np.testing.assert_allclose(part(0.6), wobble3(0.6))


def test_spline_reproduces_cubic():
    """Test that the not-a-knot spline is exact on cubic data."""
    nodes = np.linspace(0.0, 1.0, 9)
    spline = SplineCurve(nodes, nodes ** 3)
    assert spline.order == 3
    assert spline(0.3)[0] == pytest.approx(0.027, abs=1e-12)
    assert SplineCurve(nodes, nodes, kind="pchip").order == 1
    with pytest.raises(ContractViolation):
        SplineCurve(nodes, nodes, kind="quintic")


def test_compose_derivatives_chain_rule():
    """Test jets of sin(t^2) at t = 1/2."""
    t = 0.5
    g = t * t
    outer = np.array([[np.sin(g)], [np.cos(g)], [-np.sin(g)]])
    inner = np.array([g, 2 * t, 2.0])
    result = compose_derivatives(outer, inner)[:, 0]
    expected = [np.sin(g), 2 * t * np.cos(g), 2 * np.cos(g) - 4 * t * t * np.sin(g)]
    np.testing.assert_allclose(result, expected, atol=1e-14)


def test_product_and_exp_derivatives():
    """Test Leibniz and exponential jets on closed forms."""
    result = product_derivatives([1.0, 1.0, 0.0], [[1.0], [2.0], [2.0]])
    assert result[2, 0] == pytest.approx(6.0)
    np.testing.assert_allclose(exp_derivatives(np.array([[0.0], [2.0], [0.0]]))[:, 0], [1.0, 2.0, 4.0])


@settings(max_examples=40, deadline=None)
@given(st.lists(coefficient, min_size=3, max_size=3), times)
def test_reversal_is_involution(coeffs, t):
    """Test that reversing twice gives back the curve."""
    c = PolynomialCurve([coeffs, [1.0, 0.0, -1.0]])
    np.testing.assert_allclose(c.reversed().reversed()(t), c(t), atol=1e-14)


@settings(max_examples=40, deadline=None)
@given(st.lists(coefficient, min_size=2, max_size=2), coefficient, times)
def test_linear_combination_is_linear(mean, weight, t):
    """Test that combinations evaluate pointwise."""
    a = FourierCurve(mean, [[0.5, 0.0]], [[0.0, 0.5]])
    b = PolynomialCurve([[1.0, 2.0], [0.0, 1.0]])
    combo = LinearCombination([a, b], [weight, 1.0])
    np.testing.assert_allclose(combo(t), weight * a(t) + b(t), atol=1e-13)
