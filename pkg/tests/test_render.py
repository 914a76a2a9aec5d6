"""Tests for render.py module."""
import xml.etree.ElementTree as ET

import pytest

from bladeprof.blade_core import build_profile
from bladeprof.constants.output import SVG_NAMESPACE
from bladeprof.constants.profile import PROFILE_KIND_LINEAR
from bladeprof.inverse import InverseSpec, solve_inverse
from bladeprof.render import blade_points, render_svg

POLYLINE = f'{{{SVG_NAMESPACE}}}polyline'
CIRCLE = f'{{{SVG_NAMESPACE}}}circle'
LINE = f'{{{SVG_NAMESPACE}}}line'


def _parse(document):
    return ET.fromstring(document.encode('utf-8'))


def test_single_blade_polyline_matches_samples(linear_profile):
    """Test that one blade gives one polyline from (0, b) to (F(0), 0).

    SVG y grows downward, so local Y = 1 appears as y = -100 at size 100.
    """
    root = _parse(render_svg(linear_profile))
    polylines = list(root.iter(POLYLINE))
    assert len(polylines) == 1
    points = polylines[0].get('points').split()
    assert len(points) == 101
    assert points[0] == "0.000000,-100.000000"
    assert points[-1] == "100.000000,0.000000"
    assert len(list(root.iter(LINE))) == 2
    assert not list(root.iter(CIRCLE))


def test_impeller_has_one_polyline_per_blade(parabola):
    """Test that twelve blades give twelve polylines and the inlet circle."""
    root = _parse(render_svg(parabola, blades=12, stroke='navy'))
    assert len(list(root.iter(POLYLINE))) == 12
    circles = list(root.iter(CIRCLE))
    assert len(circles) == 1
    assert circles[0].get('r') == "100.000000"


def test_inlet_circle_has_radius_b_not_first_point_distance():
    """Test that the inlet circle is drawn at radius b even when F(b) is not zero."""
    offset = build_profile(PROFILE_KIND_LINEAR, [0.0, 1.0], (0.5, 1.0))
    default = next(_parse(render_svg(offset, blades=3)).iter(CIRCLE))
    assert default.get('r') == "100.000000"
    explicit = next(_parse(render_svg(offset, blades=3, inlet_radius=0.8)).iter(CIRCLE))
    assert explicit.get('r') == "80.000000"


def test_copies_are_rotated_about_the_origin(linear_profile):
    """Test that the second of two blades is the first rotated by pi."""
    root = _parse(render_svg(linear_profile, blades=2, samples=3))
    first, second = (line.get('points').split() for line in root.iter(POLYLINE))
    assert first[0] == "0.000000,-100.000000"
    assert second[0] == "0.000000,100.000000"


def test_render_is_deterministic(identity_law, unit_frame):
    """Test that identical inputs serialise to identical documents."""
    solution = solve_inverse(InverseSpec(identity_law, unit_frame, 0.5))
    assert render_svg(solution, blades=7) == render_svg(solution, blades=7)


def test_solution_source_uses_its_samples(identity_law, unit_frame):
    """Test that a ProfileSolution is drawn through exactly its samples."""
    solution = solve_inverse(InverseSpec(identity_law, unit_frame, 0.5, samples=21))
    points = blade_points(solution)
    assert len(points) == 21
    assert points[0] == (0.0, 1.0)


def test_document_header_and_size(linear_profile):
    """Test the XML declaration and the scaling of coordinates by size."""
    document = render_svg(linear_profile, size=10.0, samples=2)
    assert document.startswith('<?xml version="1.0" encoding="UTF-8"?>\n<svg')
    points = next(_parse(document).iter(POLYLINE)).get('points').split()
    assert points == ["0.000000,-10.000000", "10.000000,0.000000"]


@pytest.mark.parametrize("kwargs, message", [
    ({'blades': 0}, "Blade count must be an integer >= 1"),
    ({'blades': 1.5}, "Blade count must be an integer >= 1"),
    ({'size': 0.0}, "Render size must be positive"),
    ({'samples': 1}, "at least 2 samples"),
    ({'blades': 3, 'inlet_radius': 0.0}, "Inlet radius must be positive"),
])
def test_render_validation(linear_profile, kwargs, message):
    """Test that invalid render options are rejected."""
    with pytest.raises(ValueError, match=message):
        render_svg(linear_profile, **kwargs)


def test_render_rejects_unsupported_source():
    """Test that only profiles and solutions can be drawn."""
    with pytest.raises(ValueError, match="Cannot render list"):
        render_svg([(0.0, 1.0)])
