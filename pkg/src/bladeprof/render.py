"""SVG rendering of a single blade or a whole impeller.

A single blade is drawn in its local frame together with the X and Y axes.
An impeller is N copies of the blade rotated by 2*pi*k/N about the local
origin, so the inlet points (0, b) lie on the inner circle of radius b.
SVG's y axis points down; local Y is negated on output.
"""
import math
import xml.etree.ElementTree as ET

import numpy as np

from bladeprof import logging
from bladeprof.blade_core import BladeProfile, _profile_derivatives
from bladeprof.constants.config import (
    DEFAULT_OUTPUT_SAMPLES,
    DEFAULT_RENDER_BLADES,
    DEFAULT_RENDER_SIZE,
    DEFAULT_RENDER_STROKE,
)
from bladeprof.constants.output import (
    SVG_AXIS_STROKE,
    SVG_COORD_FORMAT,
    SVG_MARGIN_RATIO,
    SVG_NAMESPACE,
    SVG_STROKE_WIDTH_RATIO,
    SVG_XML_DECLARATION,
)
from bladeprof.inverse import ProfileSolution

_SCOPE = 'render'


def _fmt(value):
    text = format(value, SVG_COORD_FORMAT)
    # Avoid "-0.000000" so equal drawings serialise identically
    return text[1:] if text.startswith('-') and float(text) == 0.0 else text


def blade_points(source, samples=DEFAULT_OUTPUT_SAMPLES):
    """Local (X, Y) points of a blade, from the inlet end downward.

    Args:
        source: BladeProfile (sampled at `samples` ordinates from the
            domain top) or ProfileSolution (its own samples).
        samples: Sample count for profiles.

    Raises:
        ValueError: If there are no samples or the source type is unsupported.
    """
    if isinstance(source, ProfileSolution):
        points = [(sample.F, sample.Y) for sample in source.samples]
    elif isinstance(source, BladeProfile):
        if samples < 2:
            raise ValueError(f"Rendering a profile needs at least 2 samples, got {samples}")
        lo, hi = source.domain
        points = [(_profile_derivatives(source, y)[0], y) for y in np.linspace(hi, lo, samples).tolist()]
    else:
        raise ValueError(f"Cannot render {type(source).__name__}; expected a BladeProfile or ProfileSolution")
    if not points:
        raise ValueError("Cannot render a blade with no samples")
    return points


def _inlet_ordinate(source):
    if isinstance(source, ProfileSolution):
        return source.samples[0].Y
    return source.domain[1]


def _rotate(points, angle):
    cos_a, sin_a = math.cos(angle), math.sin(angle)
    return [(x * cos_a - y * sin_a, x * sin_a + y * cos_a) for x, y in points]


def _polyline_points(points, size):
    return ' '.join(f"{_fmt(size * x)},{_fmt(-size * y)}" for x, y in points)


def render_svg(source, blades=DEFAULT_RENDER_BLADES, stroke=DEFAULT_RENDER_STROKE,
               size=DEFAULT_RENDER_SIZE, samples=DEFAULT_OUTPUT_SAMPLES, inlet_radius=None):
    """Render a blade (blades = 1) or an impeller (blades > 1) as an SVG document.

    Args:
        source: BladeProfile or ProfileSolution.
        blades: Number of blade copies, at least 1.
        stroke: SVG stroke colour of the blades.
        size: SVG user units per local length unit.
        samples: Sample count when source is a BladeProfile.
        inlet_radius: Radius b of the inlet circle drawn for impellers.
            Defaults to the inlet ordinate of the source: the first solved
            ordinate of a ProfileSolution, the domain top of a BladeProfile.

    Returns:
        The SVG document as a string, identical for identical inputs.

    Raises:
        ValueError: If blades < 1, size or inlet_radius is not positive, or
            there are no samples.
    """
    if int(blades) != blades or blades < 1:
        raise ValueError(f"Blade count must be an integer >= 1, got {blades!r}")
    if not (math.isfinite(size) and size > 0.0):
        raise ValueError(f"Render size must be positive, got {size!r}")
    points = blade_points(source, samples)
    copies = [_rotate(points, 2.0 * math.pi * k / blades) if k else points for k in range(blades)]

    xs = [x for copy in copies for x, _ in copy]
    ys = [y for copy in copies for _, y in copy]
    if inlet_radius is None:
        inlet_radius = _inlet_ordinate(source)
    if not (math.isfinite(inlet_radius) and inlet_radius > 0.0):
        raise ValueError(f"Inlet radius must be positive, got {inlet_radius!r}")
    if blades > 1:
        xs += [-inlet_radius, inlet_radius]
        ys += [-inlet_radius, inlet_radius]
    else:
        xs.append(0.0)
        ys.append(0.0)
    x_lo, x_hi = size * min(xs), size * max(xs)
    y_lo, y_hi = -size * max(ys), -size * min(ys)
    margin = SVG_MARGIN_RATIO * max(x_hi - x_lo, y_hi - y_lo, size)
    x_lo, x_hi, y_lo, y_hi = x_lo - margin, x_hi + margin, y_lo - margin, y_hi + margin
    stroke_width = _fmt(SVG_STROKE_WIDTH_RATIO * size)

    root = ET.Element('svg', {
        'xmlns': SVG_NAMESPACE,
        'version': '1.1',
        'viewBox': ' '.join(_fmt(v) for v in (x_lo, y_lo, x_hi - x_lo, y_hi - y_lo)),
    })
    if blades == 1:
        axes = ET.SubElement(root, 'g', {'id': 'axes', 'stroke': SVG_AXIS_STROKE, 'stroke-width': stroke_width})
        ET.SubElement(axes, 'line', {'x1': _fmt(x_lo), 'y1': '0.000000', 'x2': _fmt(x_hi), 'y2': '0.000000'})
        ET.SubElement(axes, 'line', {'x1': '0.000000', 'y1': _fmt(y_lo), 'x2': '0.000000', 'y2': _fmt(y_hi)})
    else:
        ET.SubElement(root, 'circle', {
            'id': 'inlet', 'cx': '0.000000', 'cy': '0.000000', 'r': _fmt(size * inlet_radius),
            'fill': 'none', 'stroke': SVG_AXIS_STROKE, 'stroke-width': stroke_width,
        })
    group = ET.SubElement(root, 'g', {'id': 'blades', 'fill': 'none', 'stroke': stroke, 'stroke-width': stroke_width})
    for copy in copies:
        ET.SubElement(group, 'polyline', {'points': _polyline_points(copy, size)})

    logging.log_debug(_scope=_SCOPE, _message=f"Rendered {blades} blade(s) of {len(points)} points")
    return SVG_XML_DECLARATION + '\n' + ET.tostring(root, encoding='unicode') + '\n'
