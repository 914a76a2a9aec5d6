"""Solver constants.

Integrator and inverse methods, their defaults, and the termination
statuses reported by trajectories and profile solutions.
"""

# Integrator Methods
METHOD_RK4 = 'rk4'
METHOD_RKF45 = 'rkf45'
INTEGRATOR_METHODS = [METHOD_RK4, METHOD_RKF45]

# Integrator Defaults
DEFAULT_METHOD = METHOD_RKF45
DEFAULT_DT = 1e-3
DEFAULT_REL_TOL = 1e-10
DEFAULT_ABS_TOL = 1e-12
DEFAULT_T_END = 10.0
DEFAULT_MAX_STEPS = 1000000

# Step size controller
STEP_SAFETY = 0.9
STEP_MIN_FACTOR = 0.2
STEP_MAX_FACTOR = 5.0
STEP_UNDERFLOW_RATIO = 1e-14  # relative to max(1, |t|)
TIME_SNAP_RATIO = 1e-12  # remaining horizon treated as reached

# Event localisation
EVENT_TOLERANCE = 1e-13
EVENT_MAX_ITERATIONS = 60

# Trajectory Statuses
STATUS_REACHED_T_END = 'reached_t_end'
STATUS_EXITED_DOMAIN = 'exited_domain'
STATUS_STEP_LIMIT = 'step_limit'
STATUS_SLOPE_VANISHED = 'slope_vanished'
TRAJECTORY_STATUSES = [
    STATUS_REACHED_T_END,
    STATUS_EXITED_DOMAIN,
    STATUS_STEP_LIMIT,
    STATUS_SLOPE_VANISHED,
]

# Forward motion halts where |F_Y| drops below this
SLOPE_VANISH_THRESHOLD = 1e-12

# Inverse Methods
INVERSE_METHOD_REDUCTION = 'reduction'
INVERSE_METHOD_ODE = 'ode'
INVERSE_METHODS = [INVERSE_METHOD_REDUCTION, INVERSE_METHOD_ODE]

# Inverse Defaults
DEFAULT_INVERSE_METHOD = INVERSE_METHOD_REDUCTION
DEFAULT_INVERSE_TOL = 1e-12
DEFAULT_INVERSE_SAMPLES = 201

# Profile Solution Statuses
STATUS_COMPLETE = 'complete'
STATUS_LAW_EXCEEDS_SPEED = 'law_exceeds_speed'
PROFILE_STATUSES = [
    STATUS_COMPLETE,
    STATUS_SLOPE_VANISHED,
    STATUS_LAW_EXCEEDS_SPEED,
]

# Linear theorem thresholds
THEOREM_SPEED_TOL = 1e-9
THEOREM_CURVATURE_TOL = 1e-9
