"""
Tests for the bump profile, smoothing of step curves and Mackey gluing.
"""
# pylint: disable=redefined-outer-name
import numpy as np
import pytest

from src.curves import piecewise_constant
from src.exceptions import ContractViolation, ScheduleDecayError
from src.lcvs import riemann_integral
from src.models.evolve_config import EvolveConfig
from src.models.vector_spec import euclidean_seminorm
from src.smoothing import (BumpReparam, MackeySchedule, bump, mackey_endpoint_residual, mackey_glue,
                           partial_sum_schedule, random_schedule, reparam_profile, smooth_piecewise,
                           smoothing_residual, sup_inflation, tail_smallness)


@pytest.fixture
def steps3():
    """Provide a three-segment step curve in dimension 3."""
    return piecewise_constant([0.0, 0.3, 0.55, 1.0], [[0.5, 0.0, 0.2], [0.0, -0.7, 0.1], [0.3, 0.3, -0.4]])


def test_bump_profile():
    """Test positivity, unit mass, the peak value and flat ends."""
    rho = bump()
    assert rho is bump()
    assert rho.validate()
    assert rho.mass() == pytest.approx(1.0, abs=1e-12)
    assert float(rho(0.5)) == pytest.approx(1.66, abs=0.02)
    assert float(rho(1.2)) == 0.0


def test_bump_antiderivative():
    """Test B(0) = 0, B(1/2) = 1/2 by symmetry and B(1) = 1."""
    values = bump().antiderivative([0.0, 0.25, 0.5, 0.75, 1.0])
    np.testing.assert_allclose(values[[0, 2, 4]], [0.0, 0.5, 1.0], atol=1e-13)
    assert values[1] + values[3] == pytest.approx(1.0, abs=1e-13)


def test_bump_reparam_endpoints():
    """Test that rho fixes the endpoints with vanishing derivatives there."""
    rho = BumpReparam(0.2, 0.6)
    np.testing.assert_allclose(rho(np.array([0.2, 0.6]))[:, 0], [0.2, 0.6], atol=1e-13)
    for s in (1, 2, 3):
        np.testing.assert_allclose(rho.evaluate(np.array([0.2, 0.6]), s)[:, 0], [0.0, 0.0])
    assert rho.evaluate(0.4, 1)[0] == pytest.approx(float(bump()(0.5)))


def test_reparam_profile_fixes_breakpoints():
    """Test the glued reparametrization at each breakpoint."""
    profile = reparam_profile([0.0, 0.25, 1.0])
    np.testing.assert_allclose(profile(np.array([0.0, 0.25, 1.0]))[:, 0], [0.0, 0.25, 1.0], atol=1e-13)
    np.testing.assert_allclose(profile.jumps(1), [0.0])


def test_smoothing_removes_jumps(steps3):
    """Test that psi joins continuously with all derivatives at the breakpoints."""
    psi = smooth_piecewise(steps3)
    for s in range(3):
        np.testing.assert_allclose(psi.jumps(s), np.zeros(2), atol=1e-12)
    assert np.max(np.abs(steps3.jumps(0))) > 0.5


def test_smoothing_keeps_integral(steps3):
    """Test that the weighted reparametrization leaves the integral unchanged."""
    np.testing.assert_allclose(riemann_integral(smooth_piecewise(steps3)), riemann_integral(steps3), atol=1e-9)


def test_smoothing_keeps_product_integral(so3, steps3):
    """Test that int psi = int phi on so3."""
    assert smoothing_residual(so3, steps3, EvolveConfig(step=2.0 ** -9)).within(5.0, 1e-11)


def test_sup_inflation_bounded(steps3):
    """Test q(psi) <= max rho_hat q(phi) <= 2 q(phi)."""
    inflation = sup_inflation(steps3, euclidean_seminorm(3))
    assert 1.5 <= inflation <= 2.0


def test_schedule_increments(so3, rng):
    """Test that telescoping g_n^-1 g_0 matches the product of increments."""
    seq = random_schedule(so3, rng, n=4)
    assert seq.validate()
    assert seq.length == 4
    seq.check_decay()
    np.testing.assert_allclose(seq.telescoped(), seq.direct_product(), atol=1e-14)
    np.testing.assert_allclose(seq.breakpoints(), [0.0, 0.5, 0.75, 0.875, 0.9375, 0.96875])
    np.testing.assert_allclose(seq.scaled_increments()[1], 8 * seq.increments()[1])


def test_schedule_decay_error(so3):
    """Test that a slowly decaying increment is reported with its index."""
    seq = MackeySchedule.from_increments(so3, [[0.4, 0.0, 0.0], [0.2, 0.0, 0.0]])
    with pytest.raises(ScheduleDecayError) as excinfo:
        mackey_glue(seq, 2)
    assert excinfo.value.n == 2


def test_glue_length_contract(so3, rng):
    """Test that N must lie in 1..length."""
    seq = random_schedule(so3, rng, n=2)
    with pytest.raises(ContractViolation):
        mackey_glue(seq, 3)


def test_glued_curve_vanishes_on_tail(so3, rng):
    """Test the zero curve on [0, 1/2] and the flat tail after t_{N+1}."""
    curve = mackey_glue(random_schedule(so3, rng, n=3), 3)
    assert curve.interval == (0.0, 1.0)
    np.testing.assert_allclose(curve(np.linspace(0.0, 0.5, 9)), np.zeros((9, 3)))
    assert tail_smallness(curve) <= 1e-12


def test_glued_evolution_reaches_product(so3, rng):
    """Test that the glued curve integrates to the product of the increments."""
    seq = random_schedule(so3, rng, n=3)
    assert mackey_endpoint_residual(seq, 3) <= 1e-9


def test_partial_sum_schedule():
    """Test the scalar schedule whose endpoint is minus the partial sum."""
    seq = partial_sum_schedule(4)
    expected = -sum(2.0 ** -(k * k) for k in range(1, 5))
    assert seq.direct_product()[0] == pytest.approx(expected, abs=1e-15)
    assert mackey_endpoint_residual(seq, 4) <= 1e-10
