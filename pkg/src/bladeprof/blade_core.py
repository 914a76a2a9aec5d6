"""Domain types and evaluators for blade profiles, speed laws and the blade frame.

A blade profile is the graph X = F(Y) in the frame local to one blade; the
inlet point (0, b) sits on the Y axis. A speed law prescribes the magnitude
gamma(Y) of the ordinate rate; the direction of travel is carried by the
frame's sigma.

All values are immutable after construction and every evaluator is a pure
function, so they can be shared between threads.
"""
import math
from dataclasses import dataclass, field
from typing import Any, Tuple

import numpy as np
from numpy.polynomial import polynomial as npoly
from scipy.interpolate import CubicSpline

from bladeprof import logging
from bladeprof.constants.law import (
    LAW_KIND_AFFINE,
    LAW_KIND_CONSTANT,
    LAW_KIND_EXPONENTIAL,
    LAW_KIND_POWER,
    LAW_KIND_TABULATED,
    LAW_KINDS,
    LAW_PARAM_COUNTS,
)
from bladeprof.constants.profile import (
    MIN_SPLINE_SAMPLES,
    PROFILE_KIND_LINEAR,
    PROFILE_KIND_POLYNOMIAL,
    PROFILE_KIND_SPLINE,
    PROFILE_KINDS,
    SIGMA_DEFAULT,
    SIGMA_VALUES,
    SPLINE_BC_NATURAL,
)

_SCOPE = 'blade_core'


class NumericalFailure(ArithmeticError):
    """Raised when a computation has no valid numeric continuation."""
    pass


def _require_finite(name, value):
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value!r}")
    return float(value)


def _validate_domain(domain):
    """Return domain as a (lo, hi) float tuple, rejecting degenerate intervals."""
    try:
        lo, hi = domain
    except (TypeError, ValueError):
        raise ValueError(f"Domain must be a (lo, hi) pair, got {domain!r}")
    lo = _require_finite('Domain lower bound', lo)
    hi = _require_finite('Domain upper bound', hi)
    if not lo < hi:
        raise ValueError(f"Domain must satisfy lo < hi, got [{lo}, {hi}]")
    return (lo, hi)


def _check_in_domain(what, domain, y):
    lo, hi = domain
    if not lo <= y <= hi:
        raise ValueError(f"Y = {y!r} outside {what} domain [{lo}, {hi}]")


@dataclass(frozen=True)
class FrameSpec:
    """Local blade frame: inlet ordinate b, inlet slope m0, traversal direction sigma."""
    b: float
    m0: float
    sigma: int = SIGMA_DEFAULT

    def __post_init__(self):
        b = _require_finite('Inlet ordinate b', self.b)
        m0 = _require_finite('Inlet slope m0', self.m0)
        if b <= 0.0:
            raise ValueError(f"Inlet ordinate b must be positive, got {b}")
        if m0 == 0.0:
            raise ValueError("Inlet slope m0 must be nonzero")
        if self.sigma not in SIGMA_VALUES:
            raise ValueError(f"Traversal direction sigma must be +1 or -1, got {self.sigma!r}")
        object.__setattr__(self, 'b', b)
        object.__setattr__(self, 'm0', m0)
        object.__setattr__(self, 'sigma', int(self.sigma))


@dataclass(frozen=True)
class BladeProfile:
    """Twice-differentiable blade profile X = F(Y) on a closed interval.

    Build instances with build_profile(); the evaluator field holds the
    polynomial coefficient arrays or the scipy spline.
    """
    kind: str
    parameters: Tuple[Any, ...]
    domain: Tuple[float, float]
    end_slopes: Any = None
    evaluator: Any = field(default=None, repr=False, compare=False)


@dataclass(frozen=True)
class SpeedLaw:
    """Prescribed ordinate-rate magnitude gamma(Y) > 0 on a closed interval."""
    kind: str
    parameters: Tuple[Any, ...]
    domain: Tuple[float, float]
    evaluator: Any = field(default=None, repr=False, compare=False)


@dataclass(frozen=True)
class AnchorReport:
    """Outcome of checking F(b) = 0 and F_Y(b) = m0."""
    passed: bool
    value_residual: float
    slope_residual: float
    tol: float


def _polynomial_evaluator(coeffs):
    coeffs = np.asarray(coeffs, dtype=float)
    first = npoly.polyder(coeffs) if coeffs.size > 1 else np.zeros(1)
    second = npoly.polyder(first) if first.size > 1 else np.zeros(1)
    return (coeffs, first, second)


def _spline_samples(samples, what):
    """Validate (Y, value) samples and return them as two float arrays."""
    try:
        points = [(float(y), float(value)) for y, value in samples]
    except (TypeError, ValueError):
        raise ValueError(f"{what} samples must be (Y, value) pairs")
    if len(points) < MIN_SPLINE_SAMPLES:
        raise ValueError(
            f"{what} needs at least {MIN_SPLINE_SAMPLES} samples, got {len(points)}")
    abscissae = np.array([y for y, _ in points])
    values = np.array([value for _, value in points])
    if not (np.all(np.isfinite(abscissae)) and np.all(np.isfinite(values))):
        raise ValueError(f"{what} samples must be finite")
    if np.any(np.diff(abscissae) <= 0.0):
        raise ValueError(f"{what} sample abscissae must be strictly increasing")
    return abscissae, values


def build_profile(kind, parameters, domain, end_slopes=None):
    """Build a blade profile of the given kind.

    Args:
        kind: One of PROFILE_KINDS.
        parameters: Coefficients (polynomial, linear; constant term first)
            or (Y, F) sample pairs (cubic-spline).
        domain: (y_lo, y_hi) with y_lo < y_hi.
        end_slopes: Optional (slope_lo, slope_hi) for a clamped spline;
            the default is the natural spline.

    Returns:
        BladeProfile whose evaluators are defined on all of domain.

    Raises:
        ValueError: On unknown kind, empty or insufficient parameters,
            non-increasing spline abscissae or a reversed domain.
    """
    if kind not in PROFILE_KINDS:
        raise ValueError(f"Unknown profile kind '{kind}'; expected one of {PROFILE_KINDS}")
    domain = _validate_domain(domain)

    if kind in (PROFILE_KIND_POLYNOMIAL, PROFILE_KIND_LINEAR):
        if end_slopes is not None:
            raise ValueError("End slopes apply to cubic-spline profiles only")
        coeffs = tuple(_require_finite('Profile coefficient', c) for c in parameters)
        if not coeffs:
            raise ValueError("Profile has empty coefficients")
        if kind == PROFILE_KIND_LINEAR and len(coeffs) != 2:
            raise ValueError(f"Linear profile needs exactly 2 coefficients, got {len(coeffs)}")
        evaluator = _polynomial_evaluator(coeffs)
        logging.log_trace(_scope=_SCOPE, _message=f"Built {kind} profile with coefficients {coeffs}")
        return BladeProfile(kind, coeffs, domain, None, evaluator)

    abscissae, values = _spline_samples(parameters, 'Spline profile')
    lo, hi = domain
    if abscissae[0] < lo or abscissae[-1] > hi:
        raise ValueError(
            f"Spline abscissae [{abscissae[0]}, {abscissae[-1]}] must lie inside domain [{lo}, {hi}]")
    bc_type = SPLINE_BC_NATURAL
    if end_slopes is not None:
        slope_lo, slope_hi = (_require_finite('Spline end slope', s) for s in end_slopes)
        end_slopes = (slope_lo, slope_hi)
        bc_type = ((1, slope_lo), (1, slope_hi))
    spline = CubicSpline(abscissae, values, bc_type=bc_type)
    samples = tuple(zip(abscissae.tolist(), values.tolist()))
    logging.log_trace(_scope=_SCOPE, _message=f"Built cubic-spline profile on {len(samples)} samples")
    return BladeProfile(kind, samples, domain, end_slopes, spline)


def _profile_derivatives(profile, y):
    """Return (F, F_Y, F_YY) at y without the domain check.

    Integrator stages may step marginally past the domain edge; polynomials
    evaluate anywhere and splines extend their end pieces.
    """
    if profile.kind == PROFILE_KIND_SPLINE:
        spline = profile.evaluator
        return (float(spline(y)), float(spline(y, 1)), float(spline(y, 2)))
    coeffs, first, second = profile.evaluator
    return (float(npoly.polyval(y, coeffs)),
            float(npoly.polyval(y, first)),
            float(npoly.polyval(y, second)))


def profile_eval(profile, y):
    """Evaluate F, F_Y and F_YY of a profile at ordinate y.

    Raises:
        ValueError: If y lies outside the profile domain.
    """
    _check_in_domain('profile', profile.domain, y)
    return _profile_derivatives(profile, y)


def build_speed_law(kind, parameters, domain):
    """Build a speed law gamma(Y) > 0 of the given kind.

    Parametric kinds take a parameter list (see constants.law); tabulated
    takes (Y, gamma) pairs interpolated by a natural cubic spline.

    Raises:
        ValueError: On unknown kind, wrong parameter count, or a law that
            is not positive on its domain.
    """
    if kind not in LAW_KINDS:
        raise ValueError(f"Unknown speed law kind '{kind}'; expected one of {LAW_KINDS}")
    domain = _validate_domain(domain)
    lo, hi = domain

    if kind == LAW_KIND_TABULATED:
        abscissae, values = _spline_samples(parameters, 'Tabulated law')
        if np.any(values <= 0.0):
            raise ValueError("Tabulated law samples must be positive")
        if abscissae[0] < lo or abscissae[-1] > hi:
            raise ValueError(
                f"Tabulated law abscissae [{abscissae[0]}, {abscissae[-1]}] must lie inside domain [{lo}, {hi}]")
        spline = CubicSpline(abscissae, values, bc_type=SPLINE_BC_NATURAL)
        samples = tuple(zip(abscissae.tolist(), values.tolist()))
        return SpeedLaw(kind, samples, domain, spline)

    params = tuple(_require_finite('Speed law parameter', p) for p in parameters)
    expected = LAW_PARAM_COUNTS[kind]
    if len(params) != expected:
        raise ValueError(f"Speed law '{kind}' needs {expected} parameter(s), got {len(params)}")

    if kind == LAW_KIND_CONSTANT:
        if params[0] <= 0.0:
            raise ValueError(f"Constant speed law must be positive, got {params[0]}")
    elif kind == LAW_KIND_AFFINE:
        a0, a1 = params
        if min(a0 + a1 * lo, a0 + a1 * hi) <= 0.0:
            raise ValueError(f"Affine speed law {a0} + {a1}*Y is not positive on [{lo}, {hi}]")
    elif kind == LAW_KIND_POWER:
        if params[0] <= 0.0:
            raise ValueError(f"Power speed law coefficient must be positive, got {params[0]}")
        if lo <= 0.0:
            raise ValueError(f"Power speed law needs a strictly positive domain, got [{lo}, {hi}]")
    elif kind == LAW_KIND_EXPONENTIAL:
        if params[0] <= 0.0:
            raise ValueError(f"Exponential speed law coefficient must be positive, got {params[0]}")
    return SpeedLaw(kind, params, domain, None)


def _speed_values(law, y):
    """Return (gamma, gamma_Y) at y without the domain check."""
    kind = law.kind
    if kind == LAW_KIND_TABULATED:
        spline = law.evaluator
        return (float(spline(y)), float(spline(y, 1)))
    params = law.parameters
    if kind == LAW_KIND_CONSTANT:
        return (params[0], 0.0)
    if kind == LAW_KIND_AFFINE:
        return (params[0] + params[1] * y, params[1])
    if kind == LAW_KIND_POWER:
        k, p = params
        return (k * y ** p, k * p * y ** (p - 1.0))
    k, lam = params
    gamma = k * math.exp(lam * y)
    return (gamma, lam * gamma)


def speed_eval(law, y):
    """Evaluate gamma and gamma_Y of a speed law at ordinate y.

    Raises:
        ValueError: If y lies outside the law domain, or a tabulated law
            interpolates to a non-positive value.
    """
    _check_in_domain('speed law', law.domain, y)
    gamma, gamma_y = _speed_values(law, y)
    if gamma <= 0.0:
        raise ValueError(f"Speed law evaluates to non-positive gamma {gamma} at Y = {y}")
    return (gamma, gamma_y)


def anchor_check(profile, frame, tol):
    """Check that a profile starts at the inlet point with the inlet slope.

    Returns:
        AnchorReport with residuals |F(b)| and |F_Y(b) - m0|.

    Raises:
        ValueError: If b lies outside the profile domain or tol is not positive.
    """
    if not tol > 0.0:
        raise ValueError(f"Anchor tolerance must be positive, got {tol}")
    if not profile.domain[0] <= frame.b <= profile.domain[1]:
        raise ValueError(f"Inlet ordinate b = {frame.b} outside profile domain {list(profile.domain)}")
    value, slope, _ = _profile_derivatives(profile, frame.b)
    value_residual = abs(value)
    slope_residual = abs(slope - frame.m0)
    passed = value_residual <= tol and slope_residual <= tol
    if not passed:
        logging.log_debug(
            _scope=_SCOPE,
            _message=f"Anchor check failed: |F(b)| = {value_residual}, |F_Y(b) - m0| = {slope_residual}")
    return AnchorReport(passed, value_residual, slope_residual, tol)
