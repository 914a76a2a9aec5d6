"""Command and command-line constants.

Keys of command definition dictionaries, the command-line aliases and the
process exit codes.

Example of a command definition:

    {
        COMMAND_NAME: "forward",
        COMMAND_DESCRIPTION: "Integrate the blade equation for a given profile",
        COMMAND_ACTION: run_forward,
        COMMAND_REQUIRES_SPEC: True
    }
"""

COMMAND_NAME = "command-name"  # Used on the CLI to select the command
COMMAND_DESCRIPTION = "description"  # One-line description shown in help
COMMAND_ACTION = "function"  # Callable taking (run_spec, out_path) and returning a RunResult
COMMAND_REQUIRES_SPEC = "requires-spec"  # Whether --spec must be given

# Options
OPTION_SPEC = 'spec'
OPTION_OUT = 'out'
OPTION_HELP = 'help'
SPEC_ALIASES = ['--spec', '-s']
OUT_ALIASES = ['--out', '-o']
HELP_ALIASES = ['--help', '-h']

PROGRAM_NAME = 'bladeprof'

# Exit codes
EXIT_OK = 0
EXIT_CONFIG_ERROR = 2
EXIT_NUMERIC_FAILURE = 3
EXIT_IO_ERROR = 4
