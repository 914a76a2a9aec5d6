"""Forward problem: motion of a fluid particle along a given blade.

Integrates the blade equation

    (1 + F_Y^2) Yddot + F_Y F_YY Ydot^2 = 0

in time for Y(t), starting at the inlet ordinate b. Along exact solutions
the local speed v^2 = (1 + F_Y^2) Ydot^2 is conserved; the trajectory
reports how far the numerical solution drifts from it.
"""
import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from bladeprof import logging
from bladeprof.blade_core import _check_in_domain, _profile_derivatives
from bladeprof.constants.solver import (
    EVENT_MAX_ITERATIONS,
    EVENT_TOLERANCE,
    SLOPE_VANISH_THRESHOLD,
    STATUS_EXITED_DOMAIN,
    STATUS_REACHED_T_END,
    STATUS_SLOPE_VANISHED,
    STATUS_STEP_LIMIT,
)
from bladeprof.integrator import IntegratorConfig, advance, horizon_reached, single_step

_SCOPE = 'dynamics'


@dataclass(frozen=True)
class MotionState:
    t: float
    Y: float
    Ydot: float

    def __post_init__(self):
        for name in ('t', 'Y', 'Ydot'):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"Motion state {name} must be finite, got {getattr(self, name)!r}")


@dataclass(frozen=True)
class TrajectorySample:
    t: float
    Y: float
    Ydot: float
    X: float
    Xdot: float
    v: float


@dataclass(frozen=True)
class DriftReport:
    """Largest relative deviation of the speed from its initial value."""
    max_drift: float
    index: int
    t: float


@dataclass(frozen=True)
class Trajectory:
    samples: Tuple[TrajectorySample, ...]
    status: str
    drift: float
    max_residual: float = 0.0
    max_difference_residual: float = 0.0

    def column(self, name):
        """Return one sample field as a numpy array."""
        return np.array([getattr(sample, name) for sample in self.samples])

    @property
    def final(self):
        return self.samples[-1]


def _blade_acceleration(f_y, f_yy, ydot):
    return -f_y * f_yy * ydot * ydot / (1.0 + f_y * f_y)


def forward_rhs(profile, state):
    """Ordinate acceleration solving the blade equation at a motion state.

    Raises:
        ValueError: If state.Y lies outside the profile domain.
    """
    _check_in_domain('profile', profile.domain, state.Y)
    _, f_y, f_yy = _profile_derivatives(profile, state.Y)
    return _blade_acceleration(f_y, f_yy, state.Ydot)


def _make_rhs(profile):
    def rhs(t, y):
        _, f_y, f_yy = _profile_derivatives(profile, y[0])
        return np.array([y[1], _blade_acceleration(f_y, f_yy, y[1])])
    return rhs


def _make_sample(profile, t, y):
    ordinate = float(y[0])
    ydot = float(y[1])
    f, f_y, f_yy = _profile_derivatives(profile, ordinate)
    xdot = f_y * ydot
    sample = TrajectorySample(t, ordinate, ydot, f, xdot, math.hypot(xdot, ydot))
    yddot = _blade_acceleration(f_y, f_yy, ydot)
    residual = (1.0 + f_y * f_y) * yddot + f_y * f_yy * ydot * ydot
    return sample, abs(residual)


def difference_residual(profile, trajectory):
    """Largest blade-equation residual with Yddot taken from the samples themselves.

    Between consecutive samples Yddot is the difference quotient of Ydot,
    and Y, Ydot are the midpoint averages; all three are second-order
    accurate at the midpoint time. A trajectory of another profile, or of
    another equation, leaves a residual of the order of its acceleration.
    """
    worst = 0.0
    for before, after in zip(trajectory.samples, trajectory.samples[1:]):
        dt = after.t - before.t
        if dt <= 0.0:
            continue
        _, f_y, f_yy = _profile_derivatives(profile, 0.5 * (before.Y + after.Y))
        ydot = 0.5 * (before.Ydot + after.Ydot)
        yddot = (after.Ydot - before.Ydot) / dt
        worst = max(worst, abs((1.0 + f_y * f_y) * yddot + f_y * f_yy * ydot * ydot))
    return worst


def _speed_drift(samples):
    v0 = samples[0].v
    worst, index = 0.0, 0
    for position, sample in enumerate(samples):
        drift = abs(sample.v - v0) / v0 if v0 > 0.0 else abs(sample.v)
        if drift > worst:
            worst, index = drift, position
    return worst, index


def conservation_report(trajectory):
    """Maximum relative drift of the local speed and where it occurs.

    Raises:
        ValueError: If the trajectory has no samples.
    """
    if not trajectory.samples:
        raise ValueError("Conservation report needs a non-empty trajectory")
    worst, index = _speed_drift(trajectory.samples)
    return DriftReport(worst, index, trajectory.samples[index].t)


def _localise(rhs, t, y, y_next, h, phi, tol, method):
    """Locate phi = 0 inside the step [t, t + h] by re-stepping from y.

    Starts from the linear interpolation of phi between the step ends and
    refines with Illinois false position.
    """
    a, fa = 0.0, phi(y)
    b, fb = 1.0, phi(y_next)
    theta = fa / (fa - fb)
    y_trial = y
    side = 0
    for _ in range(EVENT_MAX_ITERATIONS):
        if theta <= 0.0:
            return t, y
        y_trial = single_step(rhs, t, y, theta * h, method)
        f_trial = phi(y_trial)
        if abs(f_trial) <= tol:
            break
        if f_trial * fb > 0.0:
            b, fb = theta, f_trial
            if side == -1:
                fa *= 0.5
            side = -1
        else:
            a, fa = theta, f_trial
            if side == 1:
                fb *= 0.5
            side = 1
        theta = (a * fb - b * fa) / (fb - fa)
    return t + theta * h, y_trial


def _find_event(profile, y, y_next):
    """Return (status, phi, tol) for the earliest event inside a step, or None."""
    lo, hi = profile.domain
    candidates = []
    if not lo <= y_next[0] <= hi:
        boundary = lo if y_next[0] < lo else hi
        crossing = (y[0] - boundary) / (y[0] - y_next[0])
        candidates.append((crossing, STATUS_EXITED_DOMAIN,
                           lambda state: state[0] - boundary,
                           EVENT_TOLERANCE * max(1.0, abs(boundary))))
    slope = _profile_derivatives(profile, y[0])[1]
    slope_next = _profile_derivatives(profile, y_next[0])[1]
    if slope * slope_next < 0.0:
        crossing = slope / (slope - slope_next)
        candidates.append((crossing, STATUS_SLOPE_VANISHED,
                           lambda state: _profile_derivatives(profile, state[0])[1],
                           SLOPE_VANISH_THRESHOLD))
    if not candidates:
        return None
    _, status, phi, tol = min(candidates, key=lambda candidate: candidate[0])
    return status, phi, tol


def integrate_forward(profile, frame, w0, config=None):
    """Integrate the motion from (t=0, Y=b, Ydot=w0) along the profile.

    Stops at config.t_end, on leaving the profile domain, after
    config.max_steps steps, or where |F_Y| falls below the vanishing
    threshold (including a sign change of F_Y within a step).

    Raises:
        ValueError: If w0 is zero or not finite, its sign differs from
            frame.sigma, or b lies outside the profile domain.
    """
    config = config or IntegratorConfig()
    if not math.isfinite(w0) or w0 == 0.0:
        raise ValueError(f"Initial rate w0 must be finite and nonzero, got {w0!r}")
    if (w0 > 0.0) != (frame.sigma > 0):
        raise ValueError(f"Initial rate w0 = {w0} does not match traversal direction sigma = {frame.sigma}")
    lo, hi = profile.domain
    if not lo <= frame.b <= hi:
        raise ValueError(f"Inlet ordinate b = {frame.b} outside profile domain [{lo}, {hi}]")

    rhs = _make_rhs(profile)
    t = 0.0
    state = np.array([frame.b, float(w0)])
    first, max_residual = _make_sample(profile, t, state)
    samples = [first]
    status = None
    if abs(_profile_derivatives(profile, frame.b)[1]) < SLOPE_VANISH_THRESHOLD:
        status = STATUS_SLOPE_VANISHED

    h = config.dt
    steps = 0
    while status is None:
        if horizon_reached(t, config.t_end):
            status = STATUS_REACHED_T_END
            break
        if steps >= config.max_steps:
            status = STATUS_STEP_LIMIT
            break
        remaining = config.t_end - t
        t_next, y_next, h_used, h = advance(rhs, t, state, min(h, remaining), config)
        if h_used == remaining:
            t_next = config.t_end
        steps += 1

        event = _find_event(profile, state, y_next)
        if event is not None:
            status, phi, tol = event
            t_event, y_event = _localise(rhs, t, state, y_next, h_used, phi, tol, config.method)
            if t_event > t:
                sample, residual = _make_sample(profile, t_event, y_event)
                samples.append(sample)
                max_residual = max(max_residual, residual)
            break

        t, state = t_next, y_next
        sample, residual = _make_sample(profile, t, state)
        samples.append(sample)
        max_residual = max(max_residual, residual)
        if abs(_profile_derivatives(profile, state[0])[1]) < SLOPE_VANISH_THRESHOLD:
            status = STATUS_SLOPE_VANISHED

    drift, _ = _speed_drift(samples)
    trajectory = Trajectory(tuple(samples), status, drift, max_residual)
    difference = difference_residual(profile, trajectory)
    if status == STATUS_STEP_LIMIT:
        logging.log_warning(_scope=_SCOPE, _message=f"Step limit {config.max_steps} reached at t = {t}")
    logging.log_info(
        _scope=_SCOPE,
        _message=f"Forward integration ({config.method}) finished with {status} after {steps} steps, "
                 f"drift {drift:.3e}, difference residual {difference:.3e}")
    return Trajectory(tuple(samples), status, drift, max_residual, difference)
