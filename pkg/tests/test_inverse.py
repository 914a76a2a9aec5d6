"""Tests for inverse.py module."""
import math

import numpy as np
import pytest

from bladeprof.blade_core import FrameSpec, NumericalFailure, build_speed_law, speed_eval
from bladeprof.constants.law import LAW_KIND_AFFINE, LAW_KIND_CONSTANT, LAW_KIND_POWER, LAW_KIND_TABULATED
from bladeprof.constants.solver import (
    INVERSE_METHOD_ODE,
    INVERSE_METHOD_REDUCTION,
    STATUS_COMPLETE,
    STATUS_LAW_EXCEEDS_SPEED,
    STATUS_SLOPE_VANISHED,
)
from bladeprof.inverse import (
    InverseSpec,
    LawExceedsSpeedError,
    check_linear_theorem,
    first_integral_constant,
    round_trip_check,
    slope_from_first_integral,
    solve_inverse,
)


@pytest.fixture
def wide_identity_law():
    """gamma(Y) = Y on [0.5, 2]."""
    return build_speed_law(LAW_KIND_POWER, [1.0, 1.0], (0.5, 2.0))


@pytest.mark.parametrize("law_args, frame, expected", [
    ((LAW_KIND_POWER, [1.0, 1.0], (0.5, 1.0)), FrameSpec(1.0, -1.0), 2.0),
    ((LAW_KIND_CONSTANT, [0.5], (0.5, 1.0)), FrameSpec(1.0, 1.0), 0.5),
    ((LAW_KIND_POWER, [1.0, 2.0], (1.0, 2.0)), FrameSpec(2.0, -2.0), 80.0),
])
def test_first_integral_constant(law_args, frame, expected):
    """Test C = (1 + m0^2) gamma(b)^2 at the inlet."""
    assert first_integral_constant(build_speed_law(*law_args), frame) == pytest.approx(expected)


def test_first_integral_needs_inlet_in_law_domain(identity_law):
    """Test that b outside the law domain is rejected."""
    with pytest.raises(ValueError, match="outside speed law domain"):
        first_integral_constant(identity_law, FrameSpec(3.0, -1.0))


def test_slope_from_first_integral(wide_identity_law, unit_frame):
    """Test the slope branch sign(m0) sqrt(C / gamma^2 - 1).

    The inlet reproduces m0 exactly; beyond Y = sqrt(2) the law exceeds
    the conserved speed and no real slope exists.
    """
    constant = first_integral_constant(wide_identity_law, unit_frame)
    assert slope_from_first_integral(wide_identity_law, unit_frame, constant, 1.0) == -1.0
    assert slope_from_first_integral(wide_identity_law, unit_frame, constant, 0.5) == pytest.approx(
        -math.sqrt(7.0), abs=1e-12)
    with pytest.raises(LawExceedsSpeedError) as excinfo:
        slope_from_first_integral(wide_identity_law, unit_frame, constant, 1.5)
    assert excinfo.value.ordinate == 1.5


def test_vanishing_slope_is_signed_zero(constant_law, unit_frame):
    """Test that C = gamma^2 yields a zero slope carrying the sign of m0."""
    slope = slope_from_first_integral(constant_law, unit_frame, 0.25, 0.7)
    assert slope == 0.0
    assert math.copysign(1.0, slope) == -1.0


def test_constant_law_gives_straight_blade(constant_law, unit_frame):
    """Test that a constant speed recovers F = 1 - Y with zero curvature."""
    solution = solve_inverse(InverseSpec(constant_law, unit_frame, 0.5, samples=11))
    assert solution.status == STATUS_COMPLETE
    for sample in solution.samples:
        assert sample.F_Y == pytest.approx(-1.0, abs=1e-14)
        assert sample.F_YY == 0.0
        assert sample.F == pytest.approx(1.0 - sample.Y, abs=1e-12)


def test_identity_law_oracle(identity_law, unit_frame):
    """Test F(0.5) for gamma = Y against the quadrature oracle 0.835.

    Integrating the negative slope from b = 1 down to 0.5 gives a positive X.
    """
    solution = solve_inverse(InverseSpec(identity_law, unit_frame, 0.5))
    assert solution.final.Y == 0.5
    assert solution.final.F == pytest.approx(0.835, abs=1e-3)
    assert solution.C == 2.0


def test_boundary_conditions_hold_at_first_sample(identity_law, unit_frame):
    """Test F(b) = 0 and F_Y(b) = m0 on the first sample for both methods."""
    for method in (INVERSE_METHOD_REDUCTION, INVERSE_METHOD_ODE):
        first = solve_inverse(InverseSpec(identity_law, unit_frame, 0.5, method=method)).samples[0]
        assert (first.Y, first.F, first.F_Y) == (1.0, 0.0, -1.0)


def test_methods_agree(identity_law, unit_frame):
    """Test that the reduction and ode methods produce the same blade."""
    reduction = solve_inverse(InverseSpec(identity_law, unit_frame, 0.5))
    ode = solve_inverse(InverseSpec(identity_law, unit_frame, 0.5, method=INVERSE_METHOD_ODE))
    assert ode.method == INVERSE_METHOD_ODE
    assert np.array_equal(reduction.column('Y'), ode.column('Y'))
    assert np.max(np.abs(reduction.column('F') - ode.column('F'))) <= 1e-8


@pytest.mark.parametrize("method", [INVERSE_METHOD_REDUCTION, INVERSE_METHOD_ODE])
def test_solution_invariants(identity_law, unit_frame, method):
    """Test the residual bound, the conserved first integral and a single slope branch."""
    solution = solve_inverse(InverseSpec(identity_law, unit_frame, 0.5, method=method))
    assert solution.max_residual <= 1e-8
    for sample in solution.samples:
        gamma = sample.Y
        assert (1.0 + sample.F_Y ** 2) * gamma ** 2 == pytest.approx(solution.C, rel=1e-10)
        assert sample.F_Y < 0.0


def test_direction_does_not_change_the_shape(identity_law):
    """Test that sigma = +1 and sigma = -1 give identical solutions."""
    down = solve_inverse(InverseSpec(identity_law, FrameSpec(1.0, -1.0, -1), 0.5))
    up = solve_inverse(InverseSpec(identity_law, FrameSpec(1.0, -1.0, 1), 0.5))
    assert down.samples == up.samples


def test_scaling_the_law_keeps_the_slopes(identity_law, unit_frame):
    """Test that k * gamma leaves every F_Y sample unchanged."""
    scaled = build_speed_law(LAW_KIND_POWER, [3.0, 1.0], (0.5, 1.0))
    base = solve_inverse(InverseSpec(identity_law, unit_frame, 0.5))
    other = solve_inverse(InverseSpec(scaled, unit_frame, 0.5))
    assert other.C == pytest.approx(9.0 * base.C)
    assert np.allclose(base.column('F_Y'), other.column('F_Y'), rtol=1e-12, atol=0.0)


def test_law_exceeding_speed_raises(unit_frame):
    """Test that gamma = 2 - Y exceeds sqrt(C) = sqrt(2) below Y = 2 - sqrt(2)."""
    law = build_speed_law(LAW_KIND_AFFINE, [2.0, -1.0], (0.5, 1.0))
    with pytest.raises(LawExceedsSpeedError) as excinfo:
        solve_inverse(InverseSpec(law, unit_frame, 0.5))
    assert excinfo.value.ordinate < 2.0 - math.sqrt(2.0)
    assert excinfo.value.solution.status == STATUS_LAW_EXCEEDS_SPEED
    assert isinstance(excinfo.value, NumericalFailure)


@pytest.mark.parametrize("method", [INVERSE_METHOD_REDUCTION, INVERSE_METHOD_ODE])
def test_law_exceeding_speed_between_grid_nodes(unit_frame, method):
    """Test that a law exceeding sqrt(C) only between grid nodes is still refused.

    The tabulated law equals 1 at both nodes of a two-point grid but its
    spline rises to about 1.53 > sqrt(2) near Y = 0.75.
    """
    law = build_speed_law(LAW_KIND_TABULATED, [(0.5, 1.0), (0.7, 1.5), (0.8, 1.5), (1.0, 1.0)], (0.5, 1.0))
    with pytest.raises(LawExceedsSpeedError) as excinfo:
        solve_inverse(InverseSpec(law, unit_frame, 0.5, method=method, samples=2))
    assert 0.5 < excinfo.value.ordinate < 1.0
    assert speed_eval(law, excinfo.value.ordinate)[0] > math.sqrt(2.0)
    assert excinfo.value.solution.status == STATUS_LAW_EXCEEDS_SPEED


@pytest.mark.parametrize("method", [INVERSE_METHOD_REDUCTION, INVERSE_METHOD_ODE])
def test_slope_vanishing_at_the_last_node_truncates(unit_frame, method):
    """Test that gamma = 2 - Y reaching sqrt(C) exactly at y_end stops one node early.

    At Y = 2 - sqrt(2) the slope is zero, so the profile keeps the ten nodes
    where F_Y is still nonzero.
    """
    y_end = 2.0 - math.sqrt(2.0)
    law = build_speed_law(LAW_KIND_AFFINE, [2.0, -1.0], (y_end, 1.0))
    solution = solve_inverse(InverseSpec(law, unit_frame, y_end, method=method, samples=11))
    assert solution.status == STATUS_SLOPE_VANISHED
    assert len(solution.samples) == 10
    assert solution.samples[-1].Y == pytest.approx(np.linspace(1.0, y_end, 11)[9], abs=1e-15)
    assert all(sample.F_Y < 0.0 for sample in solution.samples)

@pytest.mark.parametrize("kwargs, message", [
    ({'method': 'shooting'}, "Unknown inverse method"),
    ({'tol': 0.0}, "tolerance must be positive"),
    ({'samples': 1}, "integer >= 2 samples"),
    ({'y_end': 1.0}, "must lie below b"),
    ({'y_end': 0.25}, "not contained in speed law domain"),
])
def test_inverse_spec_validation(identity_law, unit_frame, kwargs, message):
    """Test that InverseSpec rejects unusable solver settings."""
    arguments = {'y_end': 0.5}
    arguments.update(kwargs)
    with pytest.raises(ValueError, match=message):
        InverseSpec(identity_law, unit_frame, **arguments)


def test_linear_theorem_on_straight_blade(linear_profile, unit_frame):
    """Test that the straight blade has constant Ydot and affine X(t)."""
    verdict = check_linear_theorem(linear_profile, unit_frame)
    assert verdict.direction == 'profile'
    assert verdict.constant_speed and verdict.zero_curvature and verdict.holds
    assert verdict.affine_motion


def test_linear_theorem_on_parabola(parabola):
    """Test that the parabola has varying Ydot, nonzero curvature and the theorem holds."""
    verdict = check_linear_theorem(parabola, FrameSpec(1.0, 1.0), w0=-0.5)
    assert not verdict.constant_speed
    assert verdict.speed_variation > 0.2
    assert not verdict.zero_curvature
    assert verdict.holds


def test_linear_theorem_for_laws(constant_law, identity_law, unit_frame):
    """Test the law direction: only the constant law gives a straight blade."""
    straight = check_linear_theorem(constant_law, unit_frame)
    assert straight.direction == 'law'
    assert straight.constant_speed and straight.zero_curvature
    assert straight.affine_motion is None
    curved = check_linear_theorem(identity_law, unit_frame)
    assert not curved.constant_speed and not curved.zero_curvature
    assert curved.holds


def test_linear_theorem_rejects_other_inputs(unit_frame):
    """Test that only profiles and laws can be checked."""
    with pytest.raises(ValueError, match="expects a BladeProfile or SpeedLaw"):
        check_linear_theorem([1.0, -1.0], unit_frame)


def test_round_trip_constant_law(constant_law, unit_frame):
    """Test that a constant law is recovered exactly from its straight blade."""
    report = round_trip_check(constant_law, unit_frame, 0.5)
    assert report.max_relative_error <= 1e-10
    assert report.solution_status == STATUS_COMPLETE


def test_round_trip_identity_law(identity_law, unit_frame):
    """Test that forward motion along the solved blade reproduces gamma = Y."""
    report = round_trip_check(identity_law, unit_frame, 0.5)
    assert report.max_relative_error <= 1e-6
    assert report.drift <= 1e-6


def test_round_trip_propagates_law_exceeding_speed(unit_frame):
    """Test that an unsolvable law surfaces as LawExceedsSpeedError."""
    law = build_speed_law(LAW_KIND_AFFINE, [2.0, -1.0], (0.5, 1.0))
    with pytest.raises(LawExceedsSpeedError):
        round_trip_check(law, unit_frame, 0.5)


def test_linear_theorem_needs_motion(parabola):
    """Test that a profile run leaving the domain at the inlet gives no verdict."""
    with pytest.raises(ValueError, match="stopped at the inlet"):
        check_linear_theorem(parabola, FrameSpec(1.0, 1.0, 1), w0=0.5)


def test_round_trip_needs_motion(identity_law):
    """Test that a round trip travelling outward from the top of the solved blade is refused."""
    with pytest.raises(ValueError, match="stopped at the inlet"):
        round_trip_check(identity_law, FrameSpec(1.0, -1.0, 1), 0.5)


@pytest.mark.parametrize("method", [INVERSE_METHOD_REDUCTION, INVERSE_METHOD_ODE])
def test_solution_conserves_the_first_integral(identity_law, unit_frame, method):
    """Test that every sample satisfies (1 + F_Y^2) gamma^2 = C independently of the law residual."""
    solution = solve_inverse(InverseSpec(identity_law, unit_frame, 0.5, method=method))
    assert solution.max_integral_drift <= 1e-8
    for sample in solution.samples:
        gamma = speed_eval(identity_law, sample.Y)[0]
        assert (1.0 + sample.F_Y ** 2) * gamma ** 2 == pytest.approx(solution.C, rel=1e-8)
