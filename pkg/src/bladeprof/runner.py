"""Command actions: run one problem from a RunSpec and write its output.

Each action takes (run_spec, out_path) and returns a RunResult whose
summary is the one-line report printed on standard output.
"""
from dataclasses import dataclass
from typing import Optional

from bladeprof import checks
from bladeprof import logging
from bladeprof import file as bladeprof_file
from bladeprof.blade_core import anchor_check
from bladeprof.constants.solver import STATUS_STEP_LIMIT
from bladeprof.dynamics import integrate_forward
from bladeprof.geometry import geometry_table
from bladeprof.inverse import check_linear_theorem, solve_inverse
from bladeprof.output import write_csv
from bladeprof.render import render_svg

_SCOPE = 'cli'

# Anchoring tolerance for forward runs; a miss is reported, not fatal
ANCHOR_TOL = 1e-9


@dataclass(frozen=True)
class RunResult:
    status: str
    summary: str
    ok: bool = True
    path: Optional[str] = None


def _target(run_spec, out_path):
    return out_path or run_spec.default_output_path()


def run_forward(run_spec, out_path=None):
    """Integrate the configured profile and write the trajectory CSV.

    A step_limit run writes nothing and reports failure.
    """
    report = anchor_check(run_spec.profile, run_spec.frame, ANCHOR_TOL)
    if not report.passed:
        logging.log_warning(
            _scope=_SCOPE,
            _message=f"Profile is not anchored at the inlet: |F(b)| = {report.value_residual:.3e}, "
                     f"|F_Y(b) - m0| = {report.slope_residual:.3e}")
    trajectory = integrate_forward(run_spec.profile, run_spec.frame, run_spec.w0, run_spec.integrator)
    if trajectory.status == STATUS_STEP_LIMIT:
        return RunResult(trajectory.status,
                         f"forward {trajectory.status}: no output written after {len(trajectory.samples)} samples",
                         ok=False)
    path = write_csv(trajectory, _target(run_spec, out_path))
    return RunResult(trajectory.status,
                     f"forward {trajectory.status}: drift {trajectory.drift:.3e}, "
                     f"{len(trajectory.samples)} samples -> {path}",
                     path=path)


def run_inverse(run_spec, out_path=None):
    """Solve the inverse problem and write the profile CSV."""
    solution = solve_inverse(run_spec.inverse)
    path = write_csv(solution, _target(run_spec, out_path))
    return RunResult(solution.status,
                     f"inverse {solution.status}: residual {solution.max_residual:.3e}, C = {solution.C!r}, "
                     f"{len(solution.samples)} samples -> {path}",
                     path=path)


def run_geometry(run_spec, out_path=None):
    """Tabulate the profile geometry and write it as CSV."""
    table = geometry_table(run_spec.profile, run_spec.output_samples)
    path = write_csv(table, _target(run_spec, out_path))
    return RunResult('complete',
                     f"geometry complete: length {table.rows[-1].s:.6g}, {len(table.rows)} rows -> {path}",
                     path=path)


def run_render(run_spec, out_path=None):
    """Render the configured profile, or the solved profile of a speed law, as SVG."""
    source = run_spec.profile if run_spec.profile is not None else solve_inverse(run_spec.inverse)
    document = render_svg(source, blades=run_spec.render_blades, stroke=run_spec.render_stroke,
                          size=run_spec.render_size, samples=run_spec.output_samples,
                          inlet_radius=run_spec.frame.b if run_spec.frame is not None else None)
    path = bladeprof_file.write_text_atomic(_target(run_spec, out_path), document)
    return RunResult('complete', f"render complete: {run_spec.render_blades} blade(s) -> {path}", path=path)


def run_check(run_spec=None, out_path=None):
    """Run the built-in invariant suite, or the linear-blade check of a RunSpec."""
    if run_spec is None:
        results = checks.run_checks()
        for result in results:
            checks.report(result)
        failed = [result.name for result in results if not result.passed]
        if failed:
            return RunResult('failed', f"check failed: {len(failed)} of {len(results)} ({', '.join(failed)})",
                             ok=False)
        return RunResult('passed', f"check passed: {len(results)} of {len(results)}")

    subject = run_spec.profile if run_spec.profile is not None else run_spec.law
    verdict = check_linear_theorem(subject, run_spec.frame, run_spec.integrator,
                                   w0=run_spec.w0, y_end=run_spec.y_end)
    status = 'passed' if verdict.holds else 'failed'
    return RunResult(status,
                     f"check {status}: constant_speed={verdict.constant_speed}, "
                     f"zero_curvature={verdict.zero_curvature}, speed variation {verdict.speed_variation:.3e}, "
                     f"max |F_YY| {verdict.max_curvature:.3e}",
                     ok=verdict.holds)
