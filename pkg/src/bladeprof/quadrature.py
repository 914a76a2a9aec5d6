"""Adaptive Simpson quadrature.

Bisects each interval until the difference between the one-panel and the
two-panel Simpson estimates falls below fifteen times the local tolerance,
then applies the Richardson correction. The tolerance is split between the
halves at every bisection.
"""
import math

from bladeprof import logging

_SCOPE = 'quadrature'

MAX_DEPTH = 40
# Differences at this relative size are rounding noise, not truncation error
_ROUNDOFF = 64.0 * 2.0 ** -52


def _simpson(fa, fm, fb, a, b):
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb)


def _adaptive(func, a, b, fa, fm, fb, whole, tol, depth):
    m = 0.5 * (a + b)
    lm = 0.5 * (a + m)
    rm = 0.5 * (m + b)
    flm = func(lm)
    frm = func(rm)
    left = _simpson(fa, flm, fm, a, m)
    right = _simpson(fm, frm, fb, m, b)
    delta = left + right - whole
    if (abs(delta) <= 15.0 * tol
            or abs(delta) <= _ROUNDOFF * abs(left + right)
            or depth >= MAX_DEPTH):
        if depth >= MAX_DEPTH:
            logging.log_warning(
                _scope=_SCOPE,
                _message=f"Maximum bisection depth reached on [{a}, {b}]; error estimate {abs(delta) / 15.0}")
        return left + right + delta / 15.0
    return (_adaptive(func, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1)
            + _adaptive(func, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1))


def adaptive_simpson(func, a, b, tol):
    """Integrate func from a to b (signed) to within tol.

    Args:
        func: Callable of one float returning a float.
        a: Lower limit (may exceed b; the result changes sign).
        b: Upper limit.
        tol: Positive absolute tolerance.

    Returns:
        The integral estimate.

    Raises:
        ValueError: If tol is not positive or a limit is not finite.
    """
    if not tol > 0.0:
        raise ValueError(f"Quadrature tolerance must be positive, got {tol}")
    if not (math.isfinite(a) and math.isfinite(b)):
        raise ValueError(f"Quadrature limits must be finite, got [{a}, {b}]")
    if a == b:
        return 0.0
    fa = func(a)
    fb = func(b)
    fm = func(0.5 * (a + b))
    whole = _simpson(fa, fm, fb, a, b)
    return _adaptive(func, a, b, fa, fm, fb, whole, tol, 0)
