"""Inverse problem: the blade shape that realises a prescribed speed law.

Given gamma(Y) = |Ydot| along the blade, the profile solves

    g_Y g (1 + F_Y^2) + g^2 F_Y F_YY = 0,   F(b) = 0,   F_Y(b) = m0.

The equation says d/dY[(1 + F_Y^2) g^2] = 0, so (1 + F_Y^2) gamma^2 equals
its inlet value C = (1 + m0^2) gamma(b)^2 everywhere. Two independent
methods are provided: "reduction" integrates the closed-form slope from
that first integral, "ode" integrates the second-order equation directly.
Reduction is the reference.

The sign of g never matters (it enters as g^2 and g g_Y), so the traversal
direction sigma does not influence the shape.
"""
import math
from dataclasses import dataclass
from typing import Any, Optional, Tuple

import numpy as np

from bladeprof import logging
from bladeprof.blade_core import (
    BladeProfile,
    NumericalFailure,
    SpeedLaw,
    _profile_derivatives,
    _speed_values,
    build_profile,
    speed_eval,
)
from bladeprof.constants.law import SLOPE_VANISH_RELATIVE_TOL
from bladeprof.constants.profile import MIN_SPLINE_SAMPLES, PROFILE_KIND_SPLINE
from bladeprof.constants.solver import (
    DEFAULT_INVERSE_METHOD,
    DEFAULT_INVERSE_SAMPLES,
    DEFAULT_INVERSE_TOL,
    DEFAULT_MAX_STEPS,
    INVERSE_METHOD_REDUCTION,
    INVERSE_METHODS,
    METHOD_RKF45,
    STATUS_COMPLETE,
    STATUS_LAW_EXCEEDS_SPEED,
    STATUS_SLOPE_VANISHED,
    THEOREM_CURVATURE_TOL,
    THEOREM_SPEED_TOL,
)
from bladeprof.dynamics import integrate_forward
from bladeprof.integrator import IntegratorConfig, solve_to
from bladeprof.quadrature import adaptive_simpson

_SCOPE = 'inverse'

# Affine fit residual below which X(t) counts as linear in t
AFFINE_TOL = 1e-12


class LawExceedsSpeedError(NumericalFailure):
    """Raised when the prescribed |Ydot| exceeds the conserved total speed.

    Attributes:
        ordinate: First ordinate where no real blade slope exists.
        solution: ProfileSolution carrying the law_exceeds_speed status.
    """
    def __init__(self, message, ordinate=None, solution=None):
        super().__init__(message)
        self.ordinate = ordinate
        self.solution = solution


@dataclass(frozen=True)
class InverseSpec:
    law: SpeedLaw
    frame: Any
    y_end: float
    method: str = DEFAULT_INVERSE_METHOD
    tol: float = DEFAULT_INVERSE_TOL
    samples: int = DEFAULT_INVERSE_SAMPLES

    def __post_init__(self):
        if self.method not in INVERSE_METHODS:
            raise ValueError(f"Unknown inverse method '{self.method}'; expected one of {INVERSE_METHODS}")
        if not (math.isfinite(self.tol) and self.tol > 0.0):
            raise ValueError(f"Inverse tolerance must be positive, got {self.tol!r}")
        if int(self.samples) != self.samples or self.samples < 2:
            raise ValueError(f"Inverse grid needs an integer >= 2 samples, got {self.samples!r}")
        if not (math.isfinite(self.y_end) and self.y_end < self.frame.b):
            raise ValueError(f"Target ordinate y_end = {self.y_end} must lie below b = {self.frame.b}")
        lo, hi = self.law.domain
        if self.y_end < lo or self.frame.b > hi:
            raise ValueError(
                f"Interval [{self.y_end}, {self.frame.b}] not contained in speed law domain [{lo}, {hi}]")


@dataclass(frozen=True)
class ProfileSample:
    Y: float
    F: float
    F_Y: float
    F_YY: float


@dataclass(frozen=True)
class ProfileSolution:
    """Blade shape sampled from b down to y_end.

    max_residual is the largest |g_Y g (1 + F_Y^2) + g^2 F_Y F_YY| over the
    samples; max_integral_drift the largest |(1 + F_Y^2) gamma^2 / C - 1|,
    which for the ode method measures the integrated slope against the
    first integral it never uses.
    """
    samples: Tuple[ProfileSample, ...]
    C: float
    status: str
    max_residual: float
    method: str = DEFAULT_INVERSE_METHOD
    max_integral_drift: float = 0.0

    def column(self, name):
        """Return one sample field as a numpy array."""
        return np.array([getattr(sample, name) for sample in self.samples])

    @property
    def final(self):
        return self.samples[-1]


@dataclass(frozen=True)
class TheoremVerdict:
    """Observed sides of "constant speed <=> zero curvature".

    For a profile input constant_speed means Ydot stayed at w0; for a law
    input it means gamma_Y vanished on the grid.
    """
    direction: str
    constant_speed: bool
    zero_curvature: bool
    holds: bool
    speed_variation: float
    max_curvature: float
    affine_motion: Optional[bool] = None
    affine_residual: Optional[float] = None


@dataclass(frozen=True)
class RoundTripReport:
    max_relative_error: float
    drift: float
    trajectory_status: str
    solution_status: str


def first_integral_constant(law, frame):
    """Conserved (1 + F_Y^2) gamma^2, fixed by the inlet conditions.

    Raises:
        ValueError: If b lies outside the law domain.
    """
    gamma, _ = speed_eval(law, frame.b)
    return (1.0 + frame.m0 * frame.m0) * gamma * gamma


def _classify_gap(constant, gamma):
    """Return -1 where the law exceeds the speed, 0 where the slope vanishes, else 1."""
    gap = constant - gamma * gamma
    band = SLOPE_VANISH_RELATIVE_TOL * constant
    if gap < -band:
        return -1
    if gap <= band:
        return 0
    return 1


def _slope(constant, gamma, sign_m0):
    return math.copysign(math.sqrt(max(constant / (gamma * gamma) - 1.0, 0.0)), sign_m0)


def slope_from_first_integral(law, frame, constant, y):
    """Blade slope sign(m0) * sqrt(C / gamma(Y)^2 - 1) at ordinate y.

    A vanishing slope (C = gamma^2 within 1e-14 relative) is returned as a
    signed zero. At y = b with the inlet constant the result is m0 exactly.

    Raises:
        ValueError: If y lies outside the law domain.
        LawExceedsSpeedError: If gamma(y)^2 exceeds C.
    """
    gamma, _ = speed_eval(law, y)
    if y == frame.b and constant == first_integral_constant(law, frame):
        return frame.m0
    state = _classify_gap(constant, gamma)
    if state < 0:
        raise LawExceedsSpeedError(
            f"Speed law gamma({y}) = {gamma} exceeds the conserved speed sqrt(C) = {math.sqrt(constant)}",
            ordinate=y)
    if state == 0:
        logging.log_debug(_scope=_SCOPE, _message=f"Slope vanishes at Y = {y}")
        return math.copysign(0.0, frame.m0)
    return _slope(constant, gamma, frame.m0)


def _law_residual(gamma, gamma_y, f_y, f_yy):
    return gamma_y * gamma * (1.0 + f_y * f_y) + gamma * gamma * f_y * f_yy


def _ode_curvature(gamma, gamma_y, f_y):
    return -gamma_y * gamma * (1.0 + f_y * f_y) / (gamma * gamma * f_y)


def _law_exceeds_speed(spec, constant, y, gamma):
    solution = ProfileSolution((), constant, STATUS_LAW_EXCEEDS_SPEED, math.nan, spec.method)
    logging.log_error(_scope=_SCOPE, _message=f"Speed law exceeds conserved speed at Y = {y}")
    return LawExceedsSpeedError(
        f"Speed law gamma({y}) = {gamma} exceeds the conserved speed sqrt(C) = {math.sqrt(constant)}",
        ordinate=y, solution=solution)


def _checked_gamma(spec, constant, y):
    """Law values at y for the solvers' inner evaluations, which fall between grid nodes.

    Raises:
        LawExceedsSpeedError: If gamma(y)^2 exceeds C.
    """
    gamma, gamma_y = _speed_values(spec.law, y)
    if _classify_gap(constant, gamma) < 0:
        raise _law_exceeds_speed(spec, constant, y, gamma)
    return gamma, gamma_y


def _valid_grid(spec, constant):
    """Grid from b to y_end, truncated before the first vanishing slope.

    Raises:
        LawExceedsSpeedError: If the law exceeds the conserved speed at a grid node.
    """
    grid = np.linspace(spec.frame.b, spec.y_end, spec.samples).tolist()
    limit = len(grid)
    for index, y in enumerate(grid):
        gamma, _ = speed_eval(spec.law, y)
        state = _classify_gap(constant, gamma)
        if state < 0:
            raise _law_exceeds_speed(spec, constant, y, gamma)
        if state == 0 and index > 0 and limit == len(grid):
            limit = index
    return grid[:limit], (STATUS_COMPLETE if limit == len(grid) else STATUS_SLOPE_VANISHED)


def _solve_reduction(spec, constant, grid):
    law, frame = spec.law, spec.frame
    span = frame.b - spec.y_end

    def slope_at(y):
        return _slope(constant, _checked_gamma(spec, constant, y)[0], frame.m0)

    samples = []
    value = 0.0
    for index, y in enumerate(grid):
        gamma, gamma_y = speed_eval(law, y)
        slope = slope_from_first_integral(law, frame, constant, y)
        if index > 0:
            previous = grid[index - 1]
            value += adaptive_simpson(slope_at, previous, y, spec.tol * abs(previous - y) / span)
        curvature = -constant * gamma_y / (gamma ** 3 * slope)
        samples.append(ProfileSample(y, value, slope, curvature))
    return samples


def _solve_ode(spec, constant, grid):
    law, frame = spec.law, spec.frame
    spacing = (frame.b - spec.y_end) / max(spec.samples - 1, 1)
    config = IntegratorConfig(
        method=METHOD_RKF45,
        dt=spacing,
        rel_tol=spec.tol,
        abs_tol=spec.tol * 1e-2,
        t_end=frame.b - spec.y_end,
        max_steps=DEFAULT_MAX_STEPS,
    )

    # Independent variable s = b - Y runs forward while Y decreases
    def rhs(s, state):
        gamma, gamma_y = _checked_gamma(spec, constant, frame.b - s)
        slope = state[1]
        return np.array([-slope, -_ode_curvature(gamma, gamma_y, slope)])

    state = np.array([0.0, frame.m0])
    h = spacing
    samples = []
    for index, y in enumerate(grid):
        if index > 0:
            state, _, h = solve_to(rhs, frame.b - grid[index - 1], state, frame.b - y, config, h)
        gamma, gamma_y = speed_eval(law, y)
        value, slope = float(state[0]), float(state[1])
        samples.append(ProfileSample(y, value, slope, _ode_curvature(gamma, gamma_y, slope)))
    return samples


def solve_inverse(spec):
    """Solve for the blade profile realising spec.law.

    Returns:
        ProfileSolution on the grid from b to y_end (truncated with status
        slope_vanished where the slope reaches zero).

    Raises:
        LawExceedsSpeedError: If the law exceeds the conserved speed in [y_end, b].
    """
    constant = first_integral_constant(spec.law, spec.frame)
    grid, status = _valid_grid(spec, constant)
    if spec.method == INVERSE_METHOD_REDUCTION:
        samples = _solve_reduction(spec, constant, grid)
    else:
        samples = _solve_ode(spec, constant, grid)

    max_residual = max_drift = 0.0
    for sample in samples:
        gamma, gamma_y = speed_eval(spec.law, sample.Y)
        max_residual = max(max_residual, abs(_law_residual(gamma, gamma_y, sample.F_Y, sample.F_YY)))
        max_drift = max(max_drift, abs((1.0 + sample.F_Y * sample.F_Y) * gamma * gamma / constant - 1.0))
    if status == STATUS_SLOPE_VANISHED:
        logging.log_warning(
            _scope=_SCOPE,
            _message=f"Slope vanishes below Y = {samples[-1].Y}; solution truncated before y_end = {spec.y_end}")
    logging.log_info(
        _scope=_SCOPE,
        _message=f"Inverse solve ({spec.method}) {status}: {len(samples)} samples, C = {constant}, "
                 f"max residual {max_residual:.3e}, first-integral drift {max_drift:.3e}")
    return ProfileSolution(tuple(samples), constant, status, max_residual, spec.method, max_drift)


def _require_motion(trajectory, frame):
    if len(trajectory.samples) < 2:
        raise ValueError(
            f"Forward run from b = {frame.b} with sigma = {frame.sigma} stopped at the inlet "
            f"({trajectory.status}); there is no motion to compare")


def _affine_residual(t, x):
    if len(t) < 3:
        return 0.0
    fit = np.polyfit(t, x, 1)
    return float(np.max(np.abs(np.polyval(fit, t) - x)))


def check_linear_theorem(subject, frame, config=None, w0=None, y_end=None,
                         method=DEFAULT_INVERSE_METHOD):
    """Observe whether constant speed coincides with zero curvature.

    A profile is integrated forward from w0 (default sigma * 1); a speed law
    is solved inverse down to y_end (default b / 2).

    Raises:
        ValueError: If subject is neither a BladeProfile nor a SpeedLaw, or
            on invalid solver inputs. Also raised when the forward run of a
            profile stops at the inlet, leaving nothing to observe.
        NumericalFailure: Propagated from the inverse solver.
    """
    if isinstance(subject, BladeProfile):
        w0 = frame.sigma * 1.0 if w0 is None else w0
        trajectory = integrate_forward(subject, frame, w0, config)
        _require_motion(trajectory, frame)
        speed_variation = float(np.max(np.abs(trajectory.column('Ydot') - w0)) / abs(w0))
        max_curvature = max(abs(_profile_derivatives(subject, sample.Y)[2]) for sample in trajectory.samples)
        affine_residual = _affine_residual(trajectory.column('t'), trajectory.column('X'))
        constant_speed = speed_variation <= THEOREM_SPEED_TOL
        zero_curvature = max_curvature <= THEOREM_CURVATURE_TOL
        verdict = TheoremVerdict('profile', constant_speed, zero_curvature,
                                 constant_speed == zero_curvature, speed_variation, max_curvature,
                                 affine_residual <= AFFINE_TOL, affine_residual)
    elif isinstance(subject, SpeedLaw):
        y_end = frame.b / 2.0 if y_end is None else y_end
        solution = solve_inverse(InverseSpec(subject, frame, y_end, method))
        speed_variation = max(abs(speed_eval(subject, sample.Y)[1]) for sample in solution.samples)
        max_curvature = float(np.max(np.abs(solution.column('F_YY'))))
        constant_speed = speed_variation <= THEOREM_SPEED_TOL
        zero_curvature = max_curvature <= THEOREM_CURVATURE_TOL
        verdict = TheoremVerdict('law', constant_speed, zero_curvature,
                                 constant_speed == zero_curvature, speed_variation, max_curvature)
    else:
        raise ValueError(f"Linear theorem check expects a BladeProfile or SpeedLaw, got {type(subject).__name__}")
    logging.log_info(_scope=_SCOPE, _message=f"Linear theorem ({verdict.direction}): holds={verdict.holds}")
    return verdict


def round_trip_check(law, frame, y_end, config=None, samples=DEFAULT_INVERSE_SAMPLES):
    """Solve the inverse problem, then recover the law by forward integration.

    The recovered blade is a cubic spline through the solution samples,
    clamped to the solved end slopes. It is integrated from w0 = sigma * gamma(b)
    and the sampled |Ydot(Y)| is compared against gamma(Y).

    Raises:
        LawExceedsSpeedError: Propagated from the inverse solve.
        ValueError: If the solution has too few samples for a spline, or the
            forward run stops at the inlet.
    """
    solution = solve_inverse(InverseSpec(law, frame, y_end, samples=samples))
    ordered = list(reversed(solution.samples))
    if len(ordered) < MIN_SPLINE_SAMPLES:
        raise ValueError(f"Round trip needs at least {MIN_SPLINE_SAMPLES} solution samples, got {len(ordered)}")
    profile = build_profile(
        PROFILE_KIND_SPLINE,
        [(sample.Y, sample.F) for sample in ordered],
        (ordered[0].Y, ordered[-1].Y),
        end_slopes=(ordered[0].F_Y, ordered[-1].F_Y),
    )
    gamma_b, _ = speed_eval(law, frame.b)
    trajectory = integrate_forward(profile, frame, frame.sigma * gamma_b, config)
    _require_motion(trajectory, frame)
    worst = 0.0
    for sample in trajectory.samples:
        gamma = _speed_values(law, sample.Y)[0]
        worst = max(worst, abs(abs(sample.Ydot) - gamma) / gamma)
    logging.log_info(_scope=_SCOPE, _message=f"Round trip max relative error {worst:.3e}, drift {trajectory.drift:.3e}")
    return RoundTripReport(worst, trajectory.drift, trajectory.status, solution.status)
