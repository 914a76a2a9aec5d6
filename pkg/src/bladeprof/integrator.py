"""Explicit Runge-Kutta integrators shared by the forward and inverse solvers.

Two methods are available: classical fixed-step RK4 and the adaptive
Runge-Kutta-Fehlberg 4(5) pair. The Fehlberg pair propagates the fifth-order
solution and uses the embedded fourth-order one for its error estimate.

The right-hand side is a callable rhs(t, y) -> numpy array for a state
vector y.
"""
import math
from dataclasses import dataclass

import numpy as np

from bladeprof import logging
from bladeprof.blade_core import NumericalFailure
from bladeprof.constants.solver import (
    DEFAULT_ABS_TOL,
    DEFAULT_DT,
    DEFAULT_MAX_STEPS,
    DEFAULT_METHOD,
    DEFAULT_REL_TOL,
    DEFAULT_T_END,
    INTEGRATOR_METHODS,
    METHOD_RK4,
    STEP_MAX_FACTOR,
    STEP_MIN_FACTOR,
    STEP_SAFETY,
    STEP_UNDERFLOW_RATIO,
    TIME_SNAP_RATIO,
)

_SCOPE = 'integrator'


class StepSizeUnderflowError(NumericalFailure):
    """Raised when the adaptive step shrinks below resolvable size."""
    pass


class StepLimitError(NumericalFailure):
    """Raised when solve_to exhausts max_steps before reaching its target."""
    pass


@dataclass(frozen=True)
class IntegratorConfig:
    method: str = DEFAULT_METHOD
    dt: float = DEFAULT_DT
    rel_tol: float = DEFAULT_REL_TOL
    abs_tol: float = DEFAULT_ABS_TOL
    t_end: float = DEFAULT_T_END
    max_steps: int = DEFAULT_MAX_STEPS

    def __post_init__(self):
        if self.method not in INTEGRATOR_METHODS:
            raise ValueError(f"Unknown integrator method '{self.method}'; expected one of {INTEGRATOR_METHODS}")
        for name in ('dt', 'rel_tol', 'abs_tol', 't_end'):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0.0):
                raise ValueError(f"Integrator {name} must be positive and finite, got {value!r}")
        if int(self.max_steps) != self.max_steps or self.max_steps < 1:
            raise ValueError(f"Integrator max_steps must be an integer >= 1, got {self.max_steps!r}")


# Fehlberg tableau
_C = (0.0, 1.0 / 4.0, 3.0 / 8.0, 12.0 / 13.0, 1.0, 1.0 / 2.0)
_A = (
    (),
    (1.0 / 4.0,),
    (3.0 / 32.0, 9.0 / 32.0),
    (1932.0 / 2197.0, -7200.0 / 2197.0, 7296.0 / 2197.0),
    (439.0 / 216.0, -8.0, 3680.0 / 513.0, -845.0 / 4104.0),
    (-8.0 / 27.0, 2.0, -3544.0 / 2565.0, 1859.0 / 4104.0, -11.0 / 40.0),
)
_B5 = (16.0 / 135.0, 0.0, 6656.0 / 12825.0, 28561.0 / 56430.0, -9.0 / 50.0, 2.0 / 55.0)
# Fifth minus fourth order weights
_E = (1.0 / 360.0, 0.0, -128.0 / 4275.0, -2197.0 / 75240.0, 1.0 / 50.0, 2.0 / 55.0)


def rk4_step(rhs, t, y, h):
    """One classical fourth-order Runge-Kutta step."""
    k1 = rhs(t, y)
    k2 = rhs(t + 0.5 * h, y + 0.5 * h * k1)
    k3 = rhs(t + 0.5 * h, y + 0.5 * h * k2)
    k4 = rhs(t + h, y + h * k3)
    return y + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def rkf45_step(rhs, t, y, h):
    """One Runge-Kutta-Fehlberg step.

    Returns:
        (y_next, error) where y_next is the fifth-order solution and error
        the difference to the embedded fourth-order solution.
    """
    stages = []
    for c, row in zip(_C, _A):
        increment = y.copy()
        for a, k in zip(row, stages):
            increment = increment + h * a * k
        stages.append(rhs(t + c * h, increment))
    y_next = y + h * sum(b * k for b, k in zip(_B5, stages))
    error = h * sum(e * k for e, k in zip(_E, stages))
    return y_next, error


def single_step(rhs, t, y, h, method):
    """One step of the given method with a prescribed size and no error control."""
    if method == METHOD_RK4:
        return rk4_step(rhs, t, y, h)
    return rkf45_step(rhs, t, y, h)[0]


def _error_norm(y, y_next, error, config):
    scale = config.abs_tol + config.rel_tol * np.maximum(np.abs(y), np.abs(y_next))
    return float(np.max(np.abs(error) / scale))


def advance(rhs, t, y, h, config):
    """Take one accepted step starting with trial size h.

    RK4 always accepts. RKF45 shrinks h until the scaled error norm is at
    most one.

    Returns:
        (t_next, y_next, h_used, h_proposed)

    Raises:
        StepSizeUnderflowError: If the adaptive step becomes unresolvable.
    """
    if config.method == METHOD_RK4:
        return t + h, rk4_step(rhs, t, y, h), h, config.dt
    while True:
        if abs(h) < STEP_UNDERFLOW_RATIO * max(1.0, abs(t)):
            raise StepSizeUnderflowError(f"Step size {h} underflowed at t = {t}")
        y_next, error = rkf45_step(rhs, t, y, h)
        norm = _error_norm(y, y_next, error, config)
        if not math.isfinite(norm):
            h *= STEP_MIN_FACTOR
            continue
        factor = STEP_MAX_FACTOR if norm == 0.0 else STEP_SAFETY * norm ** -0.2
        factor = min(STEP_MAX_FACTOR, max(STEP_MIN_FACTOR, factor))
        if norm <= 1.0:
            return t + h, y_next, h, h * factor
        logging.log_trace(_scope=_SCOPE, _message=f"Rejected step h={h} at t={t}, error norm {norm}")
        h *= factor


def horizon_reached(t, t_end):
    """True when the remaining horizon is below rounding of t_end."""
    return t_end - t <= TIME_SNAP_RATIO * max(1.0, abs(t_end))


def solve_to(rhs, t0, y0, t_target, config, h=None):
    """Integrate from t0 to exactly t_target.

    Args:
        rhs: Right-hand side rhs(t, y).
        t0: Start abscissa.
        y0: Start state (array-like).
        t_target: End abscissa, >= t0.
        config: IntegratorConfig; t_end is ignored.
        h: Optional initial trial step (defaults to config.dt).

    Returns:
        (y, steps, h_proposed)

    Raises:
        StepLimitError: If config.max_steps steps do not reach t_target.
    """
    t = float(t0)
    y = np.asarray(y0, dtype=float)
    h = config.dt if h is None else h
    steps = 0
    while not horizon_reached(t, t_target):
        if steps >= config.max_steps:
            raise StepLimitError(f"Step limit {config.max_steps} reached at t = {t} before {t_target}")
        clipped = h >= t_target - t
        t_next, y, h_used, h_next = advance(rhs, t, y, min(h, t_target - t), config)
        t = t_target if clipped and h_used == t_target - t else t_next
        h = h_next
        steps += 1
    return y, steps, h
