"""Run specification parsing.

A run specification is a flat text file of `key = value` lines; `#` starts
a comment. parse_run_spec turns it into a validated RunSpec or raises a
RunSpecError naming the offending line.
"""
import math
from dataclasses import dataclass
from typing import Optional

from bladeprof import logging
from bladeprof import file as bladeprof_file
from bladeprof.blade_core import BladeProfile, FrameSpec, SpeedLaw, build_profile, build_speed_law
from bladeprof.constants.config import (
    ASSIGN_CHAR,
    COMMENT_CHAR,
    DEFAULT_CSV_SUFFIX,
    DEFAULT_OUTPUT_SAMPLES,
    DEFAULT_RENDER_BLADES,
    DEFAULT_RENDER_SIZE,
    DEFAULT_RENDER_STROKE,
    DEFAULT_SVG_SUFFIX,
    KEY_FRAME_B,
    KEY_FRAME_M0,
    KEY_FRAME_SIGMA,
    KEY_LAW_DOMAIN,
    KEY_LAW_KIND,
    KEY_LAW_PARAMS,
    KEY_LAW_SAMPLES,
    KEY_OUTPUT_PATH,
    KEY_OUTPUT_SAMPLES,
    KEY_PROBLEM,
    KEY_PROFILE_COEFFS,
    KEY_PROFILE_DOMAIN,
    KEY_PROFILE_FILE,
    KEY_PROFILE_KIND,
    KEY_PROFILE_SAMPLES,
    KEY_PROFILE_SLOPES,
    KEY_RENDER_BLADES,
    KEY_RENDER_SIZE,
    KEY_RENDER_STROKE,
    KEY_SOLVER_ABS_TOL,
    KEY_SOLVER_DT,
    KEY_SOLVER_MAX_STEPS,
    KEY_SOLVER_METHOD,
    KEY_SOLVER_REL_TOL,
    KEY_SOLVER_SAMPLES,
    KEY_SOLVER_T_END,
    KEY_SOLVER_TOL,
    KEY_SOLVER_W0,
    KEY_SOLVER_Y_END,
    KNOWN_KEYS,
    LIST_SEPARATOR,
    PAIR_JOINER,
    PAIR_SEPARATOR,
    PROBLEM_CHECK,
    PROBLEM_FORWARD,
    PROBLEM_GEOMETRY,
    PROBLEM_INVERSE,
    PROBLEM_RENDER,
    PROBLEMS,
)
from bladeprof.constants.law import LAW_KIND_TABULATED
from bladeprof.constants.profile import PROFILE_KIND_SPLINE, SIGMA_DEFAULT
from bladeprof.constants.solver import (
    DEFAULT_ABS_TOL,
    DEFAULT_DT,
    DEFAULT_INVERSE_METHOD,
    DEFAULT_INVERSE_SAMPLES,
    DEFAULT_INVERSE_TOL,
    DEFAULT_MAX_STEPS,
    DEFAULT_METHOD,
    DEFAULT_REL_TOL,
    DEFAULT_T_END,
    INTEGRATOR_METHODS,
    INVERSE_METHODS,
)
from bladeprof.integrator import IntegratorConfig
from bladeprof.inverse import InverseSpec

_SCOPE = 'config'

# Keys each problem reads; anything else is accepted but ignored
_PROFILE_KEYS = [KEY_PROFILE_KIND, KEY_PROFILE_COEFFS, KEY_PROFILE_SAMPLES, KEY_PROFILE_DOMAIN,
                 KEY_PROFILE_FILE, KEY_PROFILE_SLOPES]
_LAW_KEYS = [KEY_LAW_KIND, KEY_LAW_PARAMS, KEY_LAW_SAMPLES, KEY_LAW_DOMAIN]
_FRAME_KEYS = [KEY_FRAME_B, KEY_FRAME_M0, KEY_FRAME_SIGMA]
_INTEGRATOR_KEYS = [KEY_SOLVER_METHOD, KEY_SOLVER_DT, KEY_SOLVER_REL_TOL, KEY_SOLVER_ABS_TOL,
                    KEY_SOLVER_T_END, KEY_SOLVER_MAX_STEPS, KEY_SOLVER_W0]
_INVERSE_KEYS = [KEY_SOLVER_METHOD, KEY_SOLVER_Y_END, KEY_SOLVER_TOL, KEY_SOLVER_SAMPLES]
_RENDER_KEYS = [KEY_RENDER_BLADES, KEY_RENDER_STROKE, KEY_RENDER_SIZE]
_OUTPUT_KEYS = [KEY_OUTPUT_PATH, KEY_OUTPUT_SAMPLES]

_PROBLEM_KEYS = {
    PROBLEM_FORWARD: _PROFILE_KEYS + _FRAME_KEYS + _INTEGRATOR_KEYS + _OUTPUT_KEYS,
    PROBLEM_INVERSE: _LAW_KEYS + _FRAME_KEYS + _INVERSE_KEYS + _OUTPUT_KEYS,
    PROBLEM_GEOMETRY: _PROFILE_KEYS + _FRAME_KEYS + _OUTPUT_KEYS,
    PROBLEM_RENDER: _PROFILE_KEYS + _LAW_KEYS + _FRAME_KEYS + _INVERSE_KEYS + _RENDER_KEYS + _OUTPUT_KEYS,
    PROBLEM_CHECK: _PROFILE_KEYS + _LAW_KEYS + _FRAME_KEYS + _INTEGRATOR_KEYS + [KEY_SOLVER_Y_END],
}


class RunSpecError(ValueError):
    """Raised for an invalid run specification.

    Attributes:
        line: 1-based line number of the offending entry, or None when a
            required key is missing.
    """
    def __init__(self, message, line=None, detail=None):
        self.message = message
        self.line = line
        self.detail = detail
        text = message if line is None else f"{message} at line {line}"
        if detail:
            text = f"{text}: {detail}"
        super().__init__(text)


@dataclass(frozen=True)
class RunSpec:
    """Validated run specification.

    Fields not used by the problem keep their defaults (None for the
    domain objects).
    """
    problem: str
    problem_line: int
    frame: Optional[FrameSpec] = None
    profile: Optional[BladeProfile] = None
    law: Optional[SpeedLaw] = None
    integrator: IntegratorConfig = IntegratorConfig()
    inverse: Optional[InverseSpec] = None
    w0: Optional[float] = None
    y_end: Optional[float] = None
    render_blades: int = DEFAULT_RENDER_BLADES
    render_stroke: str = DEFAULT_RENDER_STROKE
    render_size: float = DEFAULT_RENDER_SIZE
    output_path: Optional[str] = None
    output_samples: int = DEFAULT_OUTPUT_SAMPLES

    def default_output_path(self):
        """Output path from the spec, or `<problem>.csv` (`render.svg` for renders)."""
        if self.output_path:
            return self.output_path
        suffix = DEFAULT_SVG_SUFFIX if self.problem == PROBLEM_RENDER else DEFAULT_CSV_SUFFIX
        return f"{self.problem}{suffix}"


def _tokenise_run_spec(text):
    """Split text into a dict of key -> (value, line)."""
    entries = {}
    for number, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split(COMMENT_CHAR, 1)[0].strip()
        if not line:
            continue
        if ASSIGN_CHAR not in line:
            raise RunSpecError("expected 'key = value'", number, repr(raw_line.strip()))
        key, value = (part.strip() for part in line.split(ASSIGN_CHAR, 1))
        if not key:
            raise RunSpecError("missing key before '='", number)
        if key not in KNOWN_KEYS:
            raise RunSpecError(f"unknown key '{key}'", number)
        if not value:
            raise RunSpecError(f"empty value for key '{key}'", number)
        if key in entries:
            raise RunSpecError(f"duplicate key '{key}'", number, f"first set at line {entries[key][1]}")
        entries[key] = (value, number)
    return entries


class _Entries:
    """Typed access to tokenised entries, raising line-numbered errors."""

    def __init__(self, entries):
        self._entries = entries

    def has(self, key):
        return key in self._entries

    def line(self, key):
        return self._entries[key][1] if key in self._entries else None

    def raw(self, key, default=None):
        return self._entries[key][0] if key in self._entries else default

    def require(self, key):
        if key not in self._entries:
            raise RunSpecError(f"missing required key: {key}")
        return self._entries[key][0]

    def _number(self, key, text):
        try:
            value = float(text)
        except ValueError:
            raise RunSpecError(f"malformed value for '{key}'", self.line(key), f"expected a number, got {text!r}")
        if not math.isfinite(value):
            raise RunSpecError(f"malformed value for '{key}'", self.line(key), f"expected a finite number, got {text!r}")
        return value

    def number(self, key, default=None):
        if key not in self._entries:
            return default
        return self._number(key, self._entries[key][0])

    def required_number(self, key):
        return self._number(key, self.require(key))

    def integer(self, key, default=None):
        if key not in self._entries:
            return default
        value = self.number(key)
        if not value.is_integer():
            raise RunSpecError(f"malformed value for '{key}'", self.line(key), f"expected an integer, got {value!r}")
        return int(value)

    def numbers(self, key, default=None):
        if key not in self._entries:
            return default
        return [self._number(key, item.strip()) for item in self._entries[key][0].split(LIST_SEPARATOR)]

    def pair(self, key, default=None):
        if key not in self._entries:
            return default
        values = self.numbers(key)
        if len(values) != 2:
            raise RunSpecError(f"malformed value for '{key}'", self.line(key), f"expected 'lo,hi', got {self.raw(key)!r}")
        return tuple(values)

    def samples(self, key):
        points = []
        for item in self.require(key).split(PAIR_SEPARATOR):
            if not item.strip():
                continue
            parts = item.split(PAIR_JOINER)
            if len(parts) != 2:
                raise RunSpecError(f"malformed value for '{key}'", self.line(key), f"expected 'Y:value' pairs, got {item.strip()!r}")
            points.append((self._number(key, parts[0].strip()), self._number(key, parts[1].strip())))
        return points


def _build_frame(entries, required):
    if not required and not entries.has(KEY_FRAME_B):
        return None
    b = entries.required_number(KEY_FRAME_B)
    m0 = entries.required_number(KEY_FRAME_M0)
    sigma = entries.integer(KEY_FRAME_SIGMA, SIGMA_DEFAULT)
    try:
        return FrameSpec(b, m0, sigma)
    except ValueError as error:
        message = str(error)
        if 'sigma' in message:
            line = entries.line(KEY_FRAME_SIGMA)
        elif 'm0' in message:
            line = entries.line(KEY_FRAME_M0)
        else:
            line = entries.line(KEY_FRAME_B)
        raise RunSpecError("invalid frame", line, message)


def _load_profile_file(entries):
    # Late import: output depends on the solver modules this one imports
    from bladeprof.output import read_profile_csv

    path = entries.raw(KEY_PROFILE_FILE)
    kind = entries.raw(KEY_PROFILE_KIND, PROFILE_KIND_SPLINE)
    if kind != PROFILE_KIND_SPLINE:
        raise RunSpecError(f"'{KEY_PROFILE_FILE}' needs profile kind '{PROFILE_KIND_SPLINE}'",
                           entries.line(KEY_PROFILE_KIND))
    try:
        return read_profile_csv(path, end_slopes=entries.pair(KEY_PROFILE_SLOPES))
    except (OSError, ValueError) as error:
        raise RunSpecError(f"invalid profile file '{path}'", entries.line(KEY_PROFILE_FILE), str(error))


def _build_profile(entries, frame):
    if entries.has(KEY_PROFILE_FILE):
        return _load_profile_file(entries)
    kind = entries.require(KEY_PROFILE_KIND)
    line = entries.line(KEY_PROFILE_KIND)
    if kind == PROFILE_KIND_SPLINE:
        parameters = entries.samples(KEY_PROFILE_SAMPLES)
        default_domain = (parameters[0][0], parameters[-1][0]) if parameters else None
    else:
        parameters = entries.numbers(KEY_PROFILE_COEFFS, None)
        if parameters is None:
            entries.require(KEY_PROFILE_COEFFS)
        default_domain = (0.0, frame.b) if frame is not None else None
    domain = entries.pair(KEY_PROFILE_DOMAIN, default_domain)
    if domain is None:
        entries.require(KEY_PROFILE_DOMAIN)
    try:
        return build_profile(kind, parameters, domain, end_slopes=entries.pair(KEY_PROFILE_SLOPES))
    except ValueError as error:
        raise RunSpecError("invalid profile", entries.line(KEY_PROFILE_DOMAIN) or line, str(error))


def _build_law(entries, frame, y_end):
    kind = entries.require(KEY_LAW_KIND)
    line = entries.line(KEY_LAW_KIND)
    if kind == LAW_KIND_TABULATED:
        parameters = entries.samples(KEY_LAW_SAMPLES)
        default_domain = (parameters[0][0], parameters[-1][0]) if parameters else None
    else:
        parameters = entries.numbers(KEY_LAW_PARAMS, None)
        if parameters is None:
            entries.require(KEY_LAW_PARAMS)
        default_domain = (y_end, frame.b) if y_end is not None and y_end < frame.b else None
    domain = entries.pair(KEY_LAW_DOMAIN, default_domain)
    if domain is None:
        entries.require(KEY_LAW_DOMAIN)
    try:
        return build_speed_law(kind, parameters, domain)
    except ValueError as error:
        raise RunSpecError("invalid speed law", entries.line(KEY_LAW_DOMAIN) or line, str(error))


def _build_integrator(entries):
    method = entries.raw(KEY_SOLVER_METHOD, DEFAULT_METHOD)
    if method not in INTEGRATOR_METHODS:
        raise RunSpecError(f"unknown solver method '{method}'", entries.line(KEY_SOLVER_METHOD),
                           f"expected one of {INTEGRATOR_METHODS}")
    values = {
        'dt': entries.number(KEY_SOLVER_DT, DEFAULT_DT),
        'rel_tol': entries.number(KEY_SOLVER_REL_TOL, DEFAULT_REL_TOL),
        'abs_tol': entries.number(KEY_SOLVER_ABS_TOL, DEFAULT_ABS_TOL),
        't_end': entries.number(KEY_SOLVER_T_END, DEFAULT_T_END),
    }
    max_steps = entries.integer(KEY_SOLVER_MAX_STEPS, DEFAULT_MAX_STEPS)
    keys = {'dt': KEY_SOLVER_DT, 'rel_tol': KEY_SOLVER_REL_TOL, 'abs_tol': KEY_SOLVER_ABS_TOL,
            't_end': KEY_SOLVER_T_END}
    for name, value in values.items():
        if value <= 0.0:
            raise RunSpecError(f"'{keys[name]}' must be positive", entries.line(keys[name]), f"got {value!r}")
    if max_steps < 1:
        raise RunSpecError(f"'{KEY_SOLVER_MAX_STEPS}' must be at least 1", entries.line(KEY_SOLVER_MAX_STEPS))
    return IntegratorConfig(method=method, max_steps=max_steps, **values)


def _resolve_w0(entries, frame):
    w0 = entries.number(KEY_SOLVER_W0, frame.sigma * 1.0)
    if w0 == 0.0 or (w0 > 0.0) != (frame.sigma > 0):
        raise RunSpecError(f"'{KEY_SOLVER_W0}' must be nonzero with the sign of frame.sigma",
                           entries.line(KEY_SOLVER_W0), f"got w0 = {w0!r}, sigma = {frame.sigma}")
    return w0


def _resolve_y_end(entries, frame):
    y_end = entries.number(KEY_SOLVER_Y_END, frame.b / 2.0)
    if y_end >= frame.b:
        raise RunSpecError(f"'{KEY_SOLVER_Y_END}' must lie below frame.b", entries.line(KEY_SOLVER_Y_END),
                           f"got y_end = {y_end!r}, b = {frame.b!r}")
    return y_end


def _build_inverse(entries, law, frame, y_end):
    method = entries.raw(KEY_SOLVER_METHOD, DEFAULT_INVERSE_METHOD)
    if method not in INVERSE_METHODS:
        raise RunSpecError(f"unknown solver method '{method}'", entries.line(KEY_SOLVER_METHOD),
                           f"expected one of {INVERSE_METHODS}")
    tol = entries.number(KEY_SOLVER_TOL, DEFAULT_INVERSE_TOL)
    samples = entries.integer(KEY_SOLVER_SAMPLES, DEFAULT_INVERSE_SAMPLES)
    try:
        return InverseSpec(law, frame, y_end, method, tol, samples)
    except ValueError as error:
        line = entries.line(KEY_SOLVER_TOL) or entries.line(KEY_SOLVER_SAMPLES) or entries.line(KEY_LAW_KIND)
        raise RunSpecError("invalid inverse problem", line, str(error))


def _build_render_options(entries):
    blades = entries.integer(KEY_RENDER_BLADES, DEFAULT_RENDER_BLADES)
    if blades < 1:
        raise RunSpecError(f"'{KEY_RENDER_BLADES}' must be at least 1", entries.line(KEY_RENDER_BLADES))
    size = entries.number(KEY_RENDER_SIZE, DEFAULT_RENDER_SIZE)
    if size <= 0.0:
        raise RunSpecError(f"'{KEY_RENDER_SIZE}' must be positive", entries.line(KEY_RENDER_SIZE))
    return {
        'render_blades': blades,
        'render_stroke': entries.raw(KEY_RENDER_STROKE, DEFAULT_RENDER_STROKE),
        'render_size': size,
    }


def _warn_unused(entries, problem):
    for key in KNOWN_KEYS:
        if key != KEY_PROBLEM and entries.has(key) and key not in _PROBLEM_KEYS[problem]:
            logging.log_warning(_scope=_SCOPE,
                                _message=f"Key '{key}' at line {entries.line(key)} is ignored for problem '{problem}'")


def parse_run_spec(text):
    """Parse and validate a run specification.

    Args:
        text: Line-oriented `key = value` text.

    Returns:
        RunSpec with defaults applied for omitted solver and output keys.

    Raises:
        RunSpecError: On any syntax or validation failure; carries the line
            number of the offending entry (None for a missing key).
    """
    entries = _Entries(_tokenise_run_spec(text))
    problem = entries.require(KEY_PROBLEM)
    problem_line = entries.line(KEY_PROBLEM)
    if problem not in PROBLEMS:
        raise RunSpecError("unknown problem", problem_line, f"{problem!r} (expected one of {PROBLEMS})")
    _warn_unused(entries, problem)

    output_samples = entries.integer(KEY_OUTPUT_SAMPLES, DEFAULT_OUTPUT_SAMPLES)
    if output_samples < 2:
        raise RunSpecError(f"'{KEY_OUTPUT_SAMPLES}' must be at least 2", entries.line(KEY_OUTPUT_SAMPLES))
    values = {
        'problem': problem,
        'problem_line': problem_line,
        'output_path': entries.raw(KEY_OUTPUT_PATH),
        'output_samples': output_samples,
    }

    if problem == PROBLEM_FORWARD:
        frame = _build_frame(entries, True)
        values.update(frame=frame, profile=_build_profile(entries, frame),
                      integrator=_build_integrator(entries), w0=_resolve_w0(entries, frame))
    elif problem == PROBLEM_INVERSE:
        frame = _build_frame(entries, True)
        y_end = _resolve_y_end(entries, frame)
        law = _build_law(entries, frame, y_end)
        values.update(frame=frame, law=law, y_end=y_end, inverse=_build_inverse(entries, law, frame, y_end))
    elif problem == PROBLEM_GEOMETRY:
        frame = _build_frame(entries, False)
        values.update(frame=frame, profile=_build_profile(entries, frame))
    elif problem == PROBLEM_RENDER:
        values.update(_build_render_options(entries))
        if entries.has(KEY_LAW_KIND) and not entries.has(KEY_PROFILE_KIND) and not entries.has(KEY_PROFILE_FILE):
            frame = _build_frame(entries, True)
            y_end = _resolve_y_end(entries, frame)
            law = _build_law(entries, frame, y_end)
            values.update(frame=frame, law=law, y_end=y_end, inverse=_build_inverse(entries, law, frame, y_end))
        else:
            frame = _build_frame(entries, False)
            values.update(frame=frame, profile=_build_profile(entries, frame))
    else:
        frame = _build_frame(entries, True)
        values.update(frame=frame, integrator=_build_integrator(entries))
        if entries.has(KEY_LAW_KIND) and not entries.has(KEY_PROFILE_KIND) and not entries.has(KEY_PROFILE_FILE):
            y_end = _resolve_y_end(entries, frame)
            values.update(law=_build_law(entries, frame, y_end), y_end=y_end)
        else:
            values.update(profile=_build_profile(entries, frame), w0=_resolve_w0(entries, frame))

    logging.log_debug(_scope=_SCOPE, _message=f"Parsed run specification for problem '{problem}'")
    return RunSpec(**values)


def load_run_spec(path):
    """Read and parse a run specification file.

    Raises:
        OSError: If the file cannot be read.
        RunSpecError: If the contents are invalid.
    """
    text = bladeprof_file._read_file_raw(path)
    logging.log_info(_scope=_SCOPE, _message=f"Loading run specification from {path}")
    return parse_run_spec(text)
