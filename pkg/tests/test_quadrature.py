"""Tests for quadrature.py module."""
import math

import pytest

from bladeprof.quadrature import adaptive_simpson


def test_cubic_is_integrated_exactly():
    """Test that Simpson's rule is exact for cubics."""
    assert adaptive_simpson(lambda y: y ** 3 - 2 * y, 0.0, 2.0, 1e-12) == pytest.approx(0.0, abs=1e-14)


def test_smooth_integrand_within_tolerance():
    """Test a transcendental integrand against its closed form."""
    result = adaptive_simpson(math.sin, 0.0, math.pi, 1e-10)
    assert result == pytest.approx(2.0, abs=1e-10)


def test_reversed_limits_change_sign():
    """Test that integrating from b to a negates the result."""
    forward = adaptive_simpson(math.exp, 0.0, 1.0, 1e-12)
    backward = adaptive_simpson(math.exp, 1.0, 0.0, 1e-12)
    assert backward == pytest.approx(-forward, abs=1e-14)
    assert forward == pytest.approx(math.e - 1.0, abs=1e-12)


def test_closed_form_blade_slope_oracle():
    """Test the quadrature of -sqrt(2/Y^2 - 1) over [0.5, 1].

    This is the independent oracle for the inverse problem with gamma = Y,
    b = 1 and m0 = -1: the integral is about -0.835.
    """
    result = adaptive_simpson(lambda y: -math.sqrt(2.0 / (y * y) - 1.0), 0.5, 1.0, 1e-12)
    assert result == pytest.approx(-0.835, abs=1e-3)


def test_empty_interval_is_zero():
    """Test that a zero-width interval integrates to zero without evaluating."""
    def fail(_):
        raise AssertionError("integrand must not be evaluated")
    assert adaptive_simpson(fail, 0.5, 0.5, 1e-12) == 0.0


def test_invalid_arguments():
    """Test that non-positive tolerances and infinite limits are rejected."""
    with pytest.raises(ValueError, match="tolerance must be positive"):
        adaptive_simpson(math.sin, 0.0, 1.0, 0.0)
    with pytest.raises(ValueError, match="limits must be finite"):
        adaptive_simpson(math.sin, 0.0, math.inf, 1e-10)
