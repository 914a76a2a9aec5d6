"""Blade profile and frame constants.

These constants name the supported profile kinds and the conventions of
the local blade frame (inlet at the top of the domain, flow direction).
"""

# Profile Kinds
PROFILE_KIND_POLYNOMIAL = 'polynomial'  # Coefficients, constant term first
PROFILE_KIND_SPLINE = 'cubic-spline'  # (Y, F) samples, natural or clamped cubic spline
PROFILE_KIND_LINEAR = 'linear'  # [c0, c1] meaning F = c0 + c1*Y
PROFILE_KINDS = [
    PROFILE_KIND_POLYNOMIAL,
    PROFILE_KIND_SPLINE,
    PROFILE_KIND_LINEAR,
]

# Spline requirements
MIN_SPLINE_SAMPLES = 4
SPLINE_BC_NATURAL = 'natural'

# Traversal direction
SIGMA_DECREASING = -1  # Flow proceeds from b towards smaller Y
SIGMA_INCREASING = 1
SIGMA_DEFAULT = SIGMA_DECREASING
SIGMA_VALUES = [SIGMA_DECREASING, SIGMA_INCREASING]
