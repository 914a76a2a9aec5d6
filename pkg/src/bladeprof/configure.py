# Registers the bladeprof commands
from bladeprof import command
from bladeprof import runner
from bladeprof.constants.command import (
    COMMAND_ACTION,
    COMMAND_DESCRIPTION,
    COMMAND_NAME,
    COMMAND_REQUIRES_SPEC,
)
from bladeprof.constants.config import (
    PROBLEM_CHECK,
    PROBLEM_FORWARD,
    PROBLEM_GEOMETRY,
    PROBLEM_INVERSE,
    PROBLEM_RENDER,
)

_commands_builtin = [
    {
        COMMAND_NAME: PROBLEM_FORWARD,
        COMMAND_DESCRIPTION: "Integrate the motion along a given blade profile (trajectory CSV)",
        COMMAND_ACTION: runner.run_forward,
        COMMAND_REQUIRES_SPEC: True,
    },
    {
        COMMAND_NAME: PROBLEM_INVERSE,
        COMMAND_DESCRIPTION: "Solve for the blade profile realising a speed law (profile CSV)",
        COMMAND_ACTION: runner.run_inverse,
        COMMAND_REQUIRES_SPEC: True,
    },
    {
        COMMAND_NAME: PROBLEM_GEOMETRY,
        COMMAND_DESCRIPTION: "Tabulate curvature radius, tangent angle and arc length (CSV)",
        COMMAND_ACTION: runner.run_geometry,
        COMMAND_REQUIRES_SPEC: True,
    },
    {
        COMMAND_NAME: PROBLEM_RENDER,
        COMMAND_DESCRIPTION: "Render a blade or an impeller as SVG",
        COMMAND_ACTION: runner.run_render,
        COMMAND_REQUIRES_SPEC: True,
    },
    {
        COMMAND_NAME: PROBLEM_CHECK,
        COMMAND_DESCRIPTION: "Run the built-in invariant suite, or the linear-blade check of a spec",
        COMMAND_ACTION: runner.run_check,
        COMMAND_REQUIRES_SPEC: False,
    },
]

command.add_commands(_commands_builtin)
