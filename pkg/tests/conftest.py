"""Shared fixtures for the bladeprof test suite."""
import os
import sys

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from bladeprof import logging  # noqa: E402
from bladeprof.blade_core import FrameSpec, build_profile, build_speed_law  # noqa: E402
from bladeprof.constants.law import LAW_KIND_CONSTANT, LAW_KIND_POWER  # noqa: E402
from bladeprof.constants.profile import PROFILE_KIND_LINEAR, PROFILE_KIND_POLYNOMIAL  # noqa: E402


@pytest.fixture(autouse=True)
def clean_logging():
    """Give every test fresh logging handlers bound to the captured streams."""
    logging.reset_logging()
    yield
    logging.reset_logging()


@pytest.fixture
def unit_frame():
    """Inlet at b = 1 with slope m0 = -1, traversed towards smaller Y."""
    return FrameSpec(1.0, -1.0)


@pytest.fixture
def linear_profile():
    """F(Y) = 1 - Y on [0, 1]."""
    return build_profile(PROFILE_KIND_LINEAR, [1.0, -1.0], (0.0, 1.0))


@pytest.fixture
def parabola():
    """F(Y) = (Y^2 - 1) / 2 on [0.5, 1], anchored at b = 1 with m0 = 1."""
    return build_profile(PROFILE_KIND_POLYNOMIAL, [-0.5, 0.0, 0.5], (0.5, 1.0))


@pytest.fixture
def identity_law():
    """gamma(Y) = Y on [0.5, 1]."""
    return build_speed_law(LAW_KIND_POWER, [1.0, 1.0], (0.5, 1.0))


@pytest.fixture
def constant_law():
    """gamma(Y) = 0.5 on [0.5, 1]."""
    return build_speed_law(LAW_KIND_CONSTANT, [0.5], (0.5, 1.0))
