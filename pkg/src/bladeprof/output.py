"""CSV result files.

Every file starts with the `# bladeprof v1` comment line, then a header
row and one row per sample. Floats are written in their shortest
round-trip form, so a file read back reproduces the computed values
exactly.
"""
import math

from bladeprof import logging
from bladeprof import file as bladeprof_file
from bladeprof.blade_core import build_profile
from bladeprof.constants.output import (
    CSV_INFINITY,
    CSV_MAGIC_LINE,
    CSV_SEPARATOR,
    GEOMETRY_HEADER,
    PROFILE_HEADER,
    TRAJECTORY_HEADER,
)
from bladeprof.constants.profile import PROFILE_KIND_SPLINE
from bladeprof.dynamics import Trajectory
from bladeprof.geometry import GeometryTable
from bladeprof.inverse import ProfileSolution

_SCOPE = 'output'

# Integral floats beyond this magnitude keep repr's exponent form
_INTEGRAL_LIMIT = 1e16


def format_float(value):
    """Render a float for CSV output.

    Integral values lose the decimal point, negative zero becomes `0` and
    infinities render as `inf` / `-inf`.
    """
    value = float(value)
    if math.isinf(value):
        return CSV_INFINITY if value > 0.0 else f"-{CSV_INFINITY}"
    if value == 0.0:
        return '0'
    if value.is_integer() and abs(value) < _INTEGRAL_LIMIT:
        return str(int(value))
    return repr(value)


def _table_for(data):
    """Return (header, rows) for a supported result object."""
    if isinstance(data, Trajectory):
        header, rows = TRAJECTORY_HEADER, data.samples
    elif isinstance(data, ProfileSolution):
        header, rows = PROFILE_HEADER, data.samples
    elif isinstance(data, GeometryTable):
        header, rows = GEOMETRY_HEADER, data.rows
    else:
        raise ValueError(f"Cannot write {type(data).__name__} as CSV")
    if not rows:
        raise ValueError(f"Cannot write an empty {type(data).__name__}")
    return header, rows


def render_csv(data):
    """Render a Trajectory, ProfileSolution or GeometryTable as CSV text.

    Raises:
        ValueError: If data is empty or of an unsupported type.
    """
    header, rows = _table_for(data)
    lines = [CSV_MAGIC_LINE, CSV_SEPARATOR.join(header)]
    for row in rows:
        lines.append(CSV_SEPARATOR.join(format_float(getattr(row, name)) for name in header))
    return '\n'.join(lines) + '\n'


def write_csv(data, path):
    """Write data as CSV to path atomically.

    Returns:
        The path written.

    Raises:
        ValueError: If data is empty or of an unsupported type.
        OSError: If path is not writable.
    """
    text = render_csv(data)
    written = bladeprof_file.write_text_atomic(path, text)
    logging.log_info(_scope=_SCOPE, _message=f"Wrote {text.count(chr(10)) - 2} rows to {written}")
    return written


def read_profile_csv(path, end_slopes=None):
    """Read a profile or geometry CSV back as a cubic-spline profile.

    The spline interpolates the (Y, F) columns over the span of the samples.
    Without explicit end_slopes, a file carrying an F_Y column yields a
    spline clamped to its end slopes; otherwise the spline is natural.

    Raises:
        ValueError: On a missing format line, missing columns or malformed rows.
        OSError: If the file cannot be read.
    """
    text = bladeprof_file._read_file_raw(path)
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if not lines or lines[0] != CSV_MAGIC_LINE:
        raise ValueError(f"Profile file {path} does not start with '{CSV_MAGIC_LINE}'")
    if len(lines) < 2:
        raise ValueError(f"Profile file {path} has no header row")
    header = lines[1].split(CSV_SEPARATOR)
    if 'Y' not in header or 'F' not in header:
        raise ValueError(f"Profile file {path} needs Y and F columns, got {header}")
    columns = {name: index for index, name in enumerate(header)}

    rows = []
    for number, line in enumerate(lines[2:], start=3):
        fields = line.split(CSV_SEPARATOR)
        if len(fields) != len(header):
            raise ValueError(f"Profile file {path} row {number} has {len(fields)} fields, expected {len(header)}")
        try:
            rows.append([float(field) for field in fields])
        except ValueError:
            raise ValueError(f"Profile file {path} row {number} is not numeric: {line!r}")
    rows.sort(key=lambda row: row[columns['Y']])

    if end_slopes is None and 'F_Y' in columns and rows:
        end_slopes = (rows[0][columns['F_Y']], rows[-1][columns['F_Y']])
    samples = [(row[columns['Y']], row[columns['F']]) for row in rows]
    domain = (samples[0][0], samples[-1][0]) if samples else None
    if domain is None:
        raise ValueError(f"Profile file {path} has no data rows")
    logging.log_debug(_scope=_SCOPE, _message=f"Read {len(samples)} profile samples from {path}")
    return build_profile(PROFILE_KIND_SPLINE, samples, domain, end_slopes=end_slopes)
