"""Run specification constants.

These constants define the problems a run specification can describe and
every key accepted in a `key = value` run specification file.
"""

# Problems
PROBLEM_FORWARD = 'forward'
PROBLEM_INVERSE = 'inverse'
PROBLEM_GEOMETRY = 'geometry'
PROBLEM_RENDER = 'render'
PROBLEM_CHECK = 'check'
PROBLEMS = [
    PROBLEM_FORWARD,
    PROBLEM_INVERSE,
    PROBLEM_GEOMETRY,
    PROBLEM_RENDER,
    PROBLEM_CHECK,
]

# Syntax
COMMENT_CHAR = '#'
ASSIGN_CHAR = '='
LIST_SEPARATOR = ','
PAIR_SEPARATOR = ';'
PAIR_JOINER = ':'

# Keys
KEY_PROBLEM = 'problem'
KEY_PROFILE_KIND = 'profile.kind'
KEY_PROFILE_COEFFS = 'profile.coeffs'
KEY_PROFILE_SAMPLES = 'profile.samples'
KEY_PROFILE_DOMAIN = 'profile.domain'
KEY_PROFILE_FILE = 'profile.file'
KEY_PROFILE_SLOPES = 'profile.slopes'
KEY_LAW_KIND = 'law.kind'
KEY_LAW_PARAMS = 'law.params'
KEY_LAW_SAMPLES = 'law.samples'
KEY_LAW_DOMAIN = 'law.domain'
KEY_FRAME_B = 'frame.b'
KEY_FRAME_M0 = 'frame.m0'
KEY_FRAME_SIGMA = 'frame.sigma'
KEY_SOLVER_METHOD = 'solver.method'
KEY_SOLVER_DT = 'solver.dt'
KEY_SOLVER_REL_TOL = 'solver.rel_tol'
KEY_SOLVER_ABS_TOL = 'solver.abs_tol'
KEY_SOLVER_T_END = 'solver.t_end'
KEY_SOLVER_W0 = 'solver.w0'
KEY_SOLVER_Y_END = 'solver.y_end'
KEY_SOLVER_MAX_STEPS = 'solver.max_steps'
KEY_SOLVER_TOL = 'solver.tol'
KEY_SOLVER_SAMPLES = 'solver.samples'
KEY_RENDER_BLADES = 'render.blades'
KEY_RENDER_STROKE = 'render.stroke'
KEY_RENDER_SIZE = 'render.size'
KEY_OUTPUT_PATH = 'output.path'
KEY_OUTPUT_SAMPLES = 'output.samples'

KNOWN_KEYS = [
    KEY_PROBLEM,
    KEY_PROFILE_KIND,
    KEY_PROFILE_COEFFS,
    KEY_PROFILE_SAMPLES,
    KEY_PROFILE_DOMAIN,
    KEY_PROFILE_FILE,
    KEY_PROFILE_SLOPES,
    KEY_LAW_KIND,
    KEY_LAW_PARAMS,
    KEY_LAW_SAMPLES,
    KEY_LAW_DOMAIN,
    KEY_FRAME_B,
    KEY_FRAME_M0,
    KEY_FRAME_SIGMA,
    KEY_SOLVER_METHOD,
    KEY_SOLVER_DT,
    KEY_SOLVER_REL_TOL,
    KEY_SOLVER_ABS_TOL,
    KEY_SOLVER_T_END,
    KEY_SOLVER_W0,
    KEY_SOLVER_Y_END,
    KEY_SOLVER_MAX_STEPS,
    KEY_SOLVER_TOL,
    KEY_SOLVER_SAMPLES,
    KEY_RENDER_BLADES,
    KEY_RENDER_STROKE,
    KEY_RENDER_SIZE,
    KEY_OUTPUT_PATH,
    KEY_OUTPUT_SAMPLES,
]

# Defaults
DEFAULT_OUTPUT_SAMPLES = 101
DEFAULT_RENDER_BLADES = 1
DEFAULT_RENDER_STROKE = 'black'
DEFAULT_RENDER_SIZE = 100.0
DEFAULT_CSV_SUFFIX = '.csv'
DEFAULT_SVG_SUFFIX = '.svg'
