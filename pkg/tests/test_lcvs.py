"""
Tests for integration, seminorms, Richardson extrapolation and approximation.
"""
import numpy as np
import pytest
from scipy.integrate import quad

from src.curves import SMOOTH, ConstantCurve, FunctionCurve, PolynomialCurve, piecewise_constant
from src.exceptions import ContractViolation, IntegrationError
from src.lcvs import (Mollifier, approximate_ck, ck_seminorm, convergence_order, convolve, cumulative_integral,
                      initial_jet, integrate_samples, iterated_integrate, l1_seminorm, pairwise_orders,
                      piecewise_integral, polygon_approx, richardson_extrapolate, riemann_integral, sup_seminorm)
from src.lcvs.sampling import monotone_reparam, random_monotone_reparam, random_piecewise_curve
from src.models.vector_spec import euclidean_seminorm, max_seminorm


@pytest.fixture
def cubic2():
    """Provide a 2-dimensional cubic polynomial curve on [0, 1]."""
    return PolynomialCurve([[1.0, 0.0], [0.5, 1.0], [0.3, -0.2], [0.1, 0.1]])


@pytest.fixture
def lipschitz():
    """Provide t -> sin(5 t) / 5, Lipschitz with constant 1."""
    return FunctionCurve(lambda t, s: (5.0 ** (s - 1) * np.sin(5 * t + s * np.pi / 2))[:, None], 1, order=SMOOTH)


def test_riemann_integral_polynomial(line3):
    """Test the integral of an affine curve and the sign flip of reversed bounds."""
    np.testing.assert_allclose(riemann_integral(line3), [0.35, -0.2, 0.1], atol=1e-14)
    np.testing.assert_allclose(riemann_integral(line3, 1.0, 0.0), [-0.35, 0.2, -0.1], atol=1e-14)
    np.testing.assert_allclose(riemann_integral(line3, 0.5, 0.5), np.zeros(3))


def test_riemann_integral_with_weight():
    """Test the weighted integral int t dt."""
    value = riemann_integral(ConstantCurve([1.0]), weight=lambda t: t)
    assert value[0] == pytest.approx(0.5, abs=1e-14)


def test_piecewise_integral_splits_at_breakpoints():
    """Test that step curves integrate exactly."""
    pw = piecewise_constant([0.0, 0.3, 1.0], [[1.0], [2.0]])
    assert riemann_integral(pw)[0] == pytest.approx(1.7, abs=1e-14)
    assert piecewise_integral(pw)[0] == pytest.approx(1.7, abs=1e-14)


def test_nonfinite_integrand_reports_time():
    """Test that a non-finite value raises IntegrationError with its time."""
    bad = FunctionCurve(lambda t, s: np.where(t > 0.5, np.inf, 1.0)[:, None], 1)
    with pytest.raises(IntegrationError) as excinfo:
        riemann_integral(bad)
    assert excinfo.value.t > 0.5


def test_bounds_outside_interval_rejected(line3):
    """Test that integration bounds must lie inside the curve interval."""
    with pytest.raises(ContractViolation):
        riemann_integral(line3, 0.0, 2.0)


def test_sampled_integrals():
    """Test Simpson on samples and running integrals."""
    t = np.linspace(0.0, 1.0, 33)
    assert integrate_samples(3 * t ** 2, t) == pytest.approx(1.0, abs=1e-10)
    np.testing.assert_allclose(cumulative_integral(2 * t, t), t ** 2, atol=1e-12)


def test_ck_seminorm(line3):
    """Test the C^1 grid supremum of an affine curve."""
    result = ck_seminorm(line3, euclidean_seminorm(3), s=1, points=101)
    assert result.value == pytest.approx(np.sqrt(0.42))
    assert result.argmax == pytest.approx(1.0)
    assert result.lower_bound
    assert float(result) == result.value
    with pytest.raises(ContractViolation):
        ck_seminorm(FunctionCurve(lambda t, s: t[:, None], 1), max_seminorm(), s=1)


def test_l1_seminorm():
    """Test L1 seminorms of constant and step curves."""
    assert l1_seminorm(ConstantCurve([3.0, 4.0], 0.0, 2.0), euclidean_seminorm(2)) == pytest.approx(10.0)
    pw = piecewise_constant([0.0, 0.3, 1.0], [[1.0], [-2.0]])
    assert l1_seminorm(pw, max_seminorm()) == pytest.approx(1.7)


def test_richardson_cancels_even_powers():
    """Test extrapolation of A(h) = 1 + h^2 + h^4."""
    steps = [0.1, 0.05, 0.025]
    value, err = richardson_extrapolate(steps, [1 + h ** 2 + h ** 4 for h in steps], order=2, order_step=2)
    assert float(value) == pytest.approx(1.0, abs=1e-13)
    assert err < 1e-5
    single, single_err = richardson_extrapolate([0.1], [2.0])
    assert float(single) == 2.0 and single_err == float("inf")


def test_convergence_orders():
    """Test the least-squares and pairwise orders."""
    steps = 2.0 ** -np.arange(3, 8)
    assert convergence_order(steps, steps ** 2) == pytest.approx(2.0)
    np.testing.assert_allclose(pairwise_orders([4.0, 1.0, 0.25]), [2.0, 2.0])
    with pytest.raises(ContractViolation):
        convergence_order([0.1, 0.05], [0.0, 0.0])


def test_polygon_error():
    """Test the interpolation error of t^2 on four segments."""
    c = PolynomialCurve([[0.0], [0.0], [1.0]])
    poly = polygon_approx(c, 4)
    assert poly.count == 4
    assert sup_seminorm(poly - c, max_seminorm(), 257) <= 0.0157
    with pytest.raises(ContractViolation):
        polygon_approx(c, 0)


def test_mollifier_is_probability_density():
    """Test that rho_n has unit mass and support |u| < 1/n."""
    rho = Mollifier(4)
    mass, _ = quad(lambda u: rho(np.array([u]))[0], -0.25, 0.25)
    assert mass == pytest.approx(1.0, abs=1e-10)
    assert rho(np.array([0.3]))[0] == 0.0
    with pytest.raises(ContractViolation):
        Mollifier(0)


def test_convolution_preserves_constants_and_lipschitz_bound(lipschitz):
    """Test rho_n * c on a constant and the 1/n bound for a 1-Lipschitz curve."""
    smoothed = convolve(ConstantCurve([2.0]), 8)
    assert smoothed(0.5)[0] == pytest.approx(2.0, abs=1e-6)
    assert sup_seminorm(convolve(lipschitz, 16) - lipschitz, max_seminorm(), 65) <= 1.0 / 16


def test_iterated_integration_reconstructs(cubic2):
    """Test that I[2] rebuilds a curve from its second derivative and initial jet."""
    rebuilt = iterated_integrate(initial_jet(cubic2, 2), cubic2.derivative(2))
    assert rebuilt.p == 2
    for t in (0.0, 0.3, 0.7, 1.0):
        np.testing.assert_allclose(rebuilt(t), cubic2(t), atol=1e-10)
        np.testing.assert_allclose(rebuilt.evaluate(t, 1), cubic2.evaluate(t, 1), atol=1e-10)
    np.testing.assert_allclose(rebuilt.evaluate(0.4, 2), cubic2.evaluate(0.4, 2))


def test_c0_approximation(cubic2):
    """Test that the smoothed polygon stays within the Lipschitz bound."""
    approx = approximate_ck(cubic2, 0, 8)
    assert approx.order == SMOOTH
    for t in (0.25, 0.6):
        assert np.max(np.abs(approx(t) - cubic2(t))) <= 0.3
    with pytest.raises(ContractViolation):
        approximate_ck(FunctionCurve(lambda t, s: t[:, None], 1), 1, 8)


def test_monotone_reparam_bijection(rng):
    """Test that sampled reparametrizations are increasing bijections."""
    rho = monotone_reparam(0.5, (0.0, 2.0), (1.0, 3.0))
    assert rho(0.0)[0] == pytest.approx(1.0)
    assert rho(2.0)[0] == pytest.approx(3.0)
    assert np.all(rho.evaluate(np.linspace(0.0, 2.0, 21), 1) > 0)
    assert random_monotone_reparam(rng).interval == (0.0, 1.0)
    with pytest.raises(ContractViolation):
        monotone_reparam(1.0, (0.0, 1.0), (0.0, 1.0))


def test_random_piecewise_curve(rng):
    """Test the shape of random step curves."""
    pw = random_piecewise_curve(rng, 2, segments=4)
    assert pw.count == 4
    assert pw.interval == (0.0, 1.0)
