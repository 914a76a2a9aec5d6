"""Built-in invariant suite run by `bladeprof check`.

Each check exercises the solvers end to end against an oracle that does
not depend on the code under test (conservation laws, closed forms,
alternative methods) and returns a CheckResult.
"""
import math
import os
import tempfile
from dataclasses import dataclass

import numpy as np

from bladeprof import logging
from bladeprof.blade_core import FrameSpec, NumericalFailure, build_profile, build_speed_law, profile_eval
from bladeprof.config import RunSpecError, parse_run_spec
from bladeprof.constants.law import LAW_KIND_AFFINE, LAW_KIND_CONSTANT, LAW_KIND_POWER
from bladeprof.constants.profile import PROFILE_KIND_LINEAR, PROFILE_KIND_POLYNOMIAL
from bladeprof.constants.solver import (
    INVERSE_METHOD_ODE,
    INVERSE_METHOD_REDUCTION,
    METHOD_RK4,
    METHOD_RKF45,
    STATUS_LAW_EXCEEDS_SPEED,
)
from bladeprof.dynamics import integrate_forward
from bladeprof.geometry import geometry_sample, kinematics_sample, x_balance_residual
from bladeprof.integrator import IntegratorConfig
from bladeprof.inverse import (
    InverseSpec,
    LawExceedsSpeedError,
    check_linear_theorem,
    round_trip_check,
    solve_inverse,
)
from bladeprof.output import read_profile_csv, render_csv, write_csv
from bladeprof.render import render_svg

_SCOPE = 'check'

_PARABOLA = [-0.5, 0.0, 0.5]
_UNIT_FRAME = FrameSpec(1.0, -1.0)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _parabola(domain):
    return build_profile(PROFILE_KIND_POLYNOMIAL, _PARABOLA, domain)


def _identity_law():
    return build_speed_law(LAW_KIND_POWER, [1.0, 1.0], (0.5, 1.0))


def check_speed_first_integral():
    frame = FrameSpec(1.0, 1.0)
    config = IntegratorConfig(method=METHOD_RKF45, rel_tol=1e-10)
    trajectory = integrate_forward(_parabola((0.5, 1.0)), frame, -0.5, config)
    endpoint = abs(trajectory.final.Ydot)
    passed = trajectory.drift <= 1e-8 and abs(endpoint - math.sqrt(0.4)) <= 1e-6
    return passed, f"drift {trajectory.drift:.3e}, |Ydot| at Y={trajectory.final.Y:.6f} is {endpoint:.9f}"


def check_linear_blade():
    profile = build_profile(PROFILE_KIND_LINEAR, [1.0, -1.0], (0.0, 1.0))
    config = IntegratorConfig(method=METHOD_RK4, dt=1e-3, t_end=2.0)
    verdict = check_linear_theorem(profile, _UNIT_FRAME, config, w0=-0.2)
    law = build_speed_law(LAW_KIND_CONSTANT, [0.5], (0.5, 1.0))
    solution = solve_inverse(InverseSpec(law, _UNIT_FRAME, 0.5))
    curvature = float(np.max(np.abs(solution.column('F_YY'))))
    slope_error = float(np.max(np.abs(solution.column('F_Y') - _UNIT_FRAME.m0)))
    passed = (verdict.speed_variation <= 1e-12 and verdict.affine_motion
              and curvature <= 1e-10 and slope_error <= 1e-10)
    return passed, (f"speed variation {verdict.speed_variation:.3e}, affine residual {verdict.affine_residual:.3e}, "
                    f"inverse max |F_YY| {curvature:.3e}")


def check_inverse_methods():
    law = _identity_law()
    reduction = solve_inverse(InverseSpec(law, _UNIT_FRAME, 0.5, INVERSE_METHOD_REDUCTION))
    ode = solve_inverse(InverseSpec(law, _UNIT_FRAME, 0.5, INVERSE_METHOD_ODE))
    delta_f = float(np.max(np.abs(reduction.column('F') - ode.column('F'))))
    delta_slope = float(np.max(np.abs(reduction.column('F_Y') - ode.column('F_Y'))))
    end_value = reduction.final.F
    passed = delta_f <= 1e-8 and delta_slope <= 1e-8 and abs(end_value - 0.835) <= 1e-3
    return passed, f"max |dF| {delta_f:.3e}, max |dF_Y| {delta_slope:.3e}, F(0.5) = {end_value:.6f}"


def check_inverse_residual():
    laws = [
        build_speed_law(LAW_KIND_CONSTANT, [0.5], (0.5, 1.0)),
        build_speed_law(LAW_KIND_AFFINE, [0.1, 0.2], (0.5, 1.0)),
        build_speed_law(LAW_KIND_POWER, [1.0, 2.0], (0.5, 1.0)),
    ]
    worst = 0.0
    for law in laws:
        for method in (INVERSE_METHOD_REDUCTION, INVERSE_METHOD_ODE):
            worst = max(worst, solve_inverse(InverseSpec(law, _UNIT_FRAME, 0.5, method)).max_residual)
    return worst <= 1e-8, f"max residual {worst:.3e}"


def check_round_trip():
    report = round_trip_check(_identity_law(), _UNIT_FRAME, 0.5)
    return report.max_relative_error <= 1e-6, f"max relative error {report.max_relative_error:.3e}"


def check_geometry_formulas():
    radius = 2.0
    worst_radius = 0.0
    for y in np.linspace(-1.5, 1.5, 7).tolist():
        x = math.sqrt(radius * radius - y * y)
        sample = geometry_sample(-y / x, -radius * radius / x ** 3)
        worst_radius = max(worst_radius, abs(sample.r_c - radius) / radius)

    worst_identity = 0.0
    rng = np.random.default_rng(20260101)
    for slope in rng.uniform(-50.0, 50.0, 1000).tolist():
        sample = geometry_sample(slope, 1.0)
        worst_identity = max(worst_identity,
                             abs(sample.sin_alpha ** 2 + sample.cos_alpha ** 2 - 1.0),
                             abs(math.tan(sample.alpha) + slope) / max(1.0, abs(slope)))
        if (sample.alpha >= 0.0) != (slope <= 0.0):
            worst_identity = math.inf

    profile = _parabola((0.1, 1.0))
    worst_balance = 0.0
    for y in (0.3, 0.6, 0.9):
        _, f_y, f_yy = profile_eval(profile, y)
        ydot = -0.5
        yddot = -f_y * f_yy * ydot * ydot / (1.0 + f_y * f_y)
        worst_balance = max(worst_balance, abs(x_balance_residual(kinematics_sample(profile, y, ydot, yddot))))

    passed = worst_radius <= 1e-8 and worst_identity <= 1e-10 and worst_balance <= 1e-10
    return passed, (f"r_c error {worst_radius:.3e}, angle identities {worst_identity:.3e}, "
                    f"X balance {worst_balance:.3e}")


def _endpoint(profile, frame, config):
    final = integrate_forward(profile, frame, -0.5, config).final
    return np.array([final.Y, final.Ydot])


def check_convergence_order():
    profile = _parabola((0.1, 1.0))
    frame = FrameSpec(1.0, 1.0)
    reference = _endpoint(profile, frame, IntegratorConfig(method=METHOD_RKF45, rel_tol=1e-12, abs_tol=1e-14, t_end=1.0))
    coarse = np.linalg.norm(_endpoint(profile, frame, IntegratorConfig(method=METHOD_RK4, dt=0.1, t_end=1.0)) - reference)
    fine = np.linalg.norm(_endpoint(profile, frame, IntegratorConfig(method=METHOD_RK4, dt=0.05, t_end=1.0)) - reference)
    ratio = coarse / fine
    return 12.0 <= ratio <= 20.0, f"error ratio {ratio:.2f}"


def check_error_paths():
    law = build_speed_law(LAW_KIND_AFFINE, [2.0, -1.0], (0.5, 1.0))
    try:
        solve_inverse(InverseSpec(law, _UNIT_FRAME, 0.5))
        law_failed = False
    except LawExceedsSpeedError as error:
        law_failed = error.solution.status == STATUS_LAW_EXCEEDS_SPEED
    try:
        parse_run_spec("problem = warp")
        line = None
    except RunSpecError as error:
        line = error.line
    return law_failed and line == 1, f"law_exceeds_speed raised: {law_failed}, config error line: {line}"


def check_io_determinism():
    law = _identity_law()
    solution = solve_inverse(InverseSpec(law, _UNIT_FRAME, 0.5))
    profile = _parabola((0.5, 1.0))
    deterministic = (render_csv(solution) == render_csv(solve_inverse(InverseSpec(law, _UNIT_FRAME, 0.5)))
                     and render_svg(profile, blades=12) == render_svg(profile, blades=12))
    with tempfile.TemporaryDirectory() as directory:
        path = write_csv(solution, os.path.join(directory, 'profile.csv'))
        recovered = read_profile_csv(path)
    worst = max(abs(profile_eval(recovered, sample.Y)[0] - sample.F) for sample in solution.samples)
    return deterministic and worst <= 1e-12, f"byte-identical: {deterministic}, CSV round trip {worst:.3e}"


CHECKS = [
    ('speed-first-integral', check_speed_first_integral),
    ('linear-blade-theorem', check_linear_blade),
    ('inverse-methods-agree', check_inverse_methods),
    ('inverse-residual', check_inverse_residual),
    ('round-trip', check_round_trip),
    ('geometry-formulas', check_geometry_formulas),
    ('convergence-order', check_convergence_order),
    ('error-paths', check_error_paths),
    ('io-determinism', check_io_determinism),
]


def run_checks(selected=None):
    """Run the invariant suite.

    Args:
        selected: Optional list of check names; all checks by default.

    Returns:
        List of CheckResult in suite order. A check that raises fails with
        the exception message as detail.
    """
    results = []
    for name, check in CHECKS:
        if selected is not None and name not in selected:
            continue
        try:
            passed, detail = check()
        except (ValueError, NumericalFailure, OSError) as error:
            passed, detail = False, f"{type(error).__name__}: {error}"
        level = logging.INFO if passed else logging.ERROR
        logging.log(_level=level, _scope=_SCOPE, _message=f"{name}: {'pass' if passed else 'FAIL'} ({detail})")
        results.append(CheckResult(name, bool(passed), detail))
    return results


def report(result):
    """Print one check result line."""
    from bladeprof import core
    core.output(f"{'PASS' if result.passed else 'FAIL'} {result.name}: {result.detail}")
