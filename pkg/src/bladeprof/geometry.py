"""Pointwise differential geometry and kinematics of the blade.

Curvature radius, tangent angle, local speed, the tangential/centripetal
acceleration decomposition, the blade-equation residuals and arc length.

The tangent angle alpha satisfies tan(alpha) = -F_Y, so alpha >= 0 exactly
when F_Y <= 0. The tangential direction (sin alpha, cos alpha) is used as
written in the acceleration decomposition; it differs in X-sign from the
velocity direction when F_Y < 0 and Ydot > 0.
"""
import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from bladeprof import logging
from bladeprof.blade_core import _check_in_domain, _profile_derivatives
from bladeprof.quadrature import adaptive_simpson

_SCOPE = 'geometry'

# Radius of curvature of a straight (zero-curvature) point
STRAIGHT = math.inf


@dataclass(frozen=True)
class GeometrySample:
    r_c: float
    alpha: float
    sin_alpha: float
    cos_alpha: float

    @property
    def is_straight(self):
        """True where F_YY = 0 and the radius of curvature is infinite."""
        return self.r_c == STRAIGHT


@dataclass(frozen=True)
class KinematicsSample:
    Xdot: float
    Xddot: float
    v: float
    vdot: float
    a_t: Tuple[float, float]
    a_c: Tuple[float, float]
    residual9: float
    residual10: float
    at_rest: bool


@dataclass(frozen=True)
class GeometryRow:
    Y: float
    F: float
    F_Y: float
    F_YY: float
    r_c: float
    alpha: float
    s: float


@dataclass(frozen=True)
class GeometryTable:
    """Geometry along a profile from the inlet (domain top) downward."""
    rows: Tuple[GeometryRow, ...]


def geometry_sample(f_y, f_yy):
    """Radius of curvature and tangent angle from the first two derivatives.

    Raises:
        ValueError: On non-finite inputs.
    """
    if not (math.isfinite(f_y) and math.isfinite(f_yy)):
        raise ValueError(f"Geometry inputs must be finite, got F_Y={f_y!r}, F_YY={f_yy!r}")
    norm = math.hypot(1.0, f_y)
    r_c = STRAIGHT if f_yy == 0.0 else norm ** 3 / abs(f_yy)
    return GeometrySample(
        r_c=r_c,
        alpha=math.atan(-f_y),
        sin_alpha=-f_y / norm,
        cos_alpha=1.0 / norm,
    )


def _kinematics(f_y, f_yy, ydot, yddot):
    norm_sq = 1.0 + f_y * f_y
    xdot = f_y * ydot
    xddot = f_yy * ydot * ydot + f_y * yddot
    v = math.hypot(xdot, ydot)
    at_rest = v == 0.0
    # v * vdot = F_Y F_YY Ydot^3 + (1 + F_Y^2) Ydot Yddot
    vdot = 0.0 if at_rest else (f_y * f_yy * ydot ** 3 + norm_sq * ydot * yddot) / v
    geom = geometry_sample(f_y, f_yy)
    curvature = abs(f_yy) / norm_sq ** 1.5
    centripetal = v * v * curvature
    residual10 = norm_sq * yddot + f_y * f_yy * ydot * ydot
    return KinematicsSample(
        Xdot=xdot,
        Xddot=xddot,
        v=v,
        vdot=vdot,
        a_t=(vdot * geom.sin_alpha, vdot * geom.cos_alpha),
        a_c=(centripetal * geom.cos_alpha, centripetal * geom.sin_alpha),
        residual9=f_y * residual10,
        residual10=residual10,
        at_rest=at_rest,
    )


def kinematics_sample(profile, y, ydot, yddot):
    """Velocity, speed, acceleration decomposition and residuals at one state.

    Raises:
        ValueError: If y lies outside the profile domain or inputs are not finite.
    """
    _check_in_domain('profile', profile.domain, y)
    if not (math.isfinite(ydot) and math.isfinite(yddot)):
        raise ValueError(f"Kinematic inputs must be finite, got Ydot={ydot!r}, Yddot={yddot!r}")
    _, f_y, f_yy = _profile_derivatives(profile, y)
    sample = _kinematics(f_y, f_yy, ydot, yddot)
    if sample.at_rest:
        logging.log_trace(_scope=_SCOPE, _message=f"Rest state at Y = {y}; tangential acceleration set to zero")
    return sample


def x_balance_residual(sample):
    """Xddot minus the X-components of tangential plus centripetal acceleration."""
    return sample.Xddot - (sample.a_t[0] + sample.a_c[0])


def arc_length(profile, y1, y2, tol=1e-10):
    """Signed arc length of the profile from y1 to y2.

    Raises:
        ValueError: If an endpoint lies outside the profile domain.
    """
    _check_in_domain('profile', profile.domain, y1)
    _check_in_domain('profile', profile.domain, y2)

    def integrand(y):
        return math.hypot(1.0, _profile_derivatives(profile, y)[1])

    return adaptive_simpson(integrand, y1, y2, tol)


def geometry_table(profile, samples=101, tol=1e-10):
    """Tabulate geometry at evenly spaced ordinates from the domain top downward.

    Arc length s is measured from the first row.

    Raises:
        ValueError: If fewer than two samples are requested.
    """
    if samples < 2:
        raise ValueError(f"Geometry table needs at least 2 samples, got {samples}")
    lo, hi = profile.domain
    ordinates = np.linspace(hi, lo, samples)
    rows = []
    s = 0.0
    previous = None
    for y in ordinates.tolist():
        if previous is not None:
            s += arc_length(profile, y, previous, tol / samples)
        f, f_y, f_yy = _profile_derivatives(profile, y)
        geom = geometry_sample(f_y, f_yy)
        rows.append(GeometryRow(y, f, f_y, f_yy, geom.r_c, geom.alpha, s))
        previous = y
    logging.log_debug(_scope=_SCOPE, _message=f"Geometry table of {samples} rows, total length {s}")
    return GeometryTable(tuple(rows))
