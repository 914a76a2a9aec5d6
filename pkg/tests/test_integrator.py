"""Tests for integrator.py module."""
import math

import numpy as np
import pytest

from bladeprof.blade_core import NumericalFailure
from bladeprof.constants.solver import METHOD_RK4, METHOD_RKF45
from bladeprof.integrator import (
    IntegratorConfig,
    StepLimitError,
    StepSizeUnderflowError,
    advance,
    horizon_reached,
    rk4_step,
    rkf45_step,
    solve_to,
)


def _decay(t, y):
    return -y


def _oscillator(t, y):
    return np.array([y[1], -y[0]])


def test_config_defaults():
    """Test the documented integrator defaults."""
    config = IntegratorConfig()
    assert config.method == METHOD_RKF45
    assert (config.dt, config.rel_tol, config.abs_tol, config.t_end) == (1e-3, 1e-10, 1e-12, 10.0)
    assert config.max_steps == 1000000


@pytest.mark.parametrize("kwargs, message", [
    ({'method': 'euler'}, "Unknown integrator method"),
    ({'dt': 0.0}, "dt must be positive"),
    ({'rel_tol': -1.0}, "rel_tol must be positive"),
    ({'t_end': math.inf}, "t_end must be positive"),
    ({'max_steps': 0}, "max_steps must be an integer"),
    ({'max_steps': 2.5}, "max_steps must be an integer"),
])
def test_config_validation(kwargs, message):
    """Test that invalid integrator settings are rejected."""
    with pytest.raises(ValueError, match=message):
        IntegratorConfig(**kwargs)


def test_rk4_step_matches_taylor_series():
    """Test one RK4 step of y' = -y against exp(-h) to fifth order."""
    h = 0.1
    result = rk4_step(_decay, 0.0, np.array([1.0]), h)
    assert result[0] == pytest.approx(math.exp(-h), abs=1e-6)


def test_rkf45_step_error_estimate_is_small_and_nonzero():
    """Test that the embedded estimate tracks the local error of the step."""
    y_next, error = rkf45_step(_oscillator, 0.0, np.array([1.0, 0.0]), 0.1)
    assert y_next[0] == pytest.approx(math.cos(0.1), abs=1e-8)
    assert 0.0 < np.max(np.abs(error)) < 1e-6


def test_rk4_always_accepts_and_proposes_dt():
    """Test that advance with RK4 takes exactly the trial step."""
    config = IntegratorConfig(method=METHOD_RK4, dt=0.05)
    t_next, _, h_used, h_next = advance(_decay, 0.0, np.array([1.0]), 0.02, config)
    assert (t_next, h_used, h_next) == (0.02, 0.02, 0.05)


def test_rkf45_rejects_oversized_steps():
    """Test that the adaptive controller shrinks a step that is far too large."""
    config = IntegratorConfig(rel_tol=1e-12, abs_tol=1e-14)
    _, _, h_used, h_next = advance(_oscillator, 0.0, np.array([1.0, 0.0]), 1.0, config)
    assert h_used < 1.0
    assert h_next <= 5.0 * h_used


def test_step_underflow_raises():
    """Test that an unresolvable right-hand side raises StepSizeUnderflowError."""
    def blow_up(t, y):
        return np.array([math.nan])

    with pytest.raises(StepSizeUnderflowError):
        advance(blow_up, 0.0, np.array([1.0]), 0.1, IntegratorConfig())
    assert issubclass(StepSizeUnderflowError, NumericalFailure)


def test_solve_to_reaches_target_exactly():
    """Test that solve_to lands on the target abscissa with the expected accuracy."""
    config = IntegratorConfig(rel_tol=1e-12, abs_tol=1e-14)
    y, steps, _ = solve_to(_oscillator, 0.0, [1.0, 0.0], math.pi, config, h=0.1)
    assert y[0] == pytest.approx(-1.0, abs=1e-10)
    assert y[1] == pytest.approx(0.0, abs=1e-10)
    assert steps > 0


def test_solve_to_zero_length_is_identity():
    """Test that integrating to the start abscissa takes no steps."""
    y, steps, h = solve_to(_decay, 1.0, [2.0], 1.0, IntegratorConfig(), h=0.1)
    assert steps == 0
    assert y[0] == 2.0
    assert h == 0.1


def test_solve_to_step_limit():
    """Test that solve_to raises when max_steps cannot reach the target."""
    config = IntegratorConfig(method=METHOD_RK4, dt=0.01, max_steps=3)
    with pytest.raises(StepLimitError, match="Step limit 3"):
        solve_to(_decay, 0.0, [1.0], 1.0, config)


def test_horizon_reached_tolerates_rounding():
    """Test that accumulated rounding below 1e-12 counts as reaching t_end."""
    t = sum([0.1] * 10)
    assert t != 1.0
    assert horizon_reached(t, 1.0)
    assert not horizon_reached(0.9, 1.0)
