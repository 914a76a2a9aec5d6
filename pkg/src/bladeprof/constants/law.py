"""Speed law constants.

Kinds of the prescribed ordinate-rate magnitude gamma(Y) and the
tolerance used when the law meets the conserved speed.
"""

# Law Kinds
LAW_KIND_CONSTANT = 'constant'  # [c]
LAW_KIND_AFFINE = 'affine'  # [a0, a1] meaning a0 + a1*Y
LAW_KIND_POWER = 'power'  # [k, p] meaning k*Y**p on a positive domain
LAW_KIND_EXPONENTIAL = 'exponential'  # [k, lam] meaning k*exp(lam*Y)
LAW_KIND_TABULATED = 'tabulated'  # (Y, gamma) samples, natural cubic spline
LAW_KINDS = [
    LAW_KIND_CONSTANT,
    LAW_KIND_AFFINE,
    LAW_KIND_POWER,
    LAW_KIND_EXPONENTIAL,
    LAW_KIND_TABULATED,
]
PARAMETRIC_LAW_KINDS = [
    LAW_KIND_CONSTANT,
    LAW_KIND_AFFINE,
    LAW_KIND_POWER,
    LAW_KIND_EXPONENTIAL,
]

# Parameter counts for the parametric kinds
LAW_PARAM_COUNTS = {
    LAW_KIND_CONSTANT: 1,
    LAW_KIND_AFFINE: 2,
    LAW_KIND_POWER: 2,
    LAW_KIND_EXPONENTIAL: 2,
}

# Relative band around C - gamma**2 = 0 treated as a vanishing slope
SLOPE_VANISH_RELATIVE_TOL = 1e-14
