"""
Core facade for the bladeprof command-line tool.

Parses the command line, configures logging, dispatches to the command
actions and maps outcomes to exit codes:

    0  success
    2  configuration or validation error
    3  numerical failure (law exceeds speed, step limit, failed checks)
    4  I/O error
"""
import sys

from bladeprof.constants.command import (
    EXIT_CONFIG_ERROR,
    EXIT_IO_ERROR,
    EXIT_NUMERIC_FAILURE,
    EXIT_OK,
    OPTION_HELP,
    OPTION_OUT,
    OPTION_SPEC,
)
from bladeprof.constants.logging import LOG_NO_LOGGING_PARAM, LOG_SILENT_PARAM

_SCOPE = 'cli'

_silent = False


def _default_output_handler(message):
    print(message)


_output_handler = _default_output_handler


def set_output_handler(_handler=_default_output_handler):
    """
    Set a custom output handler for run summaries.

    Args:
        _handler: A callable that takes a message string. Defaults to built-in print().
    """
    global _output_handler
    _output_handler = _handler


def set_silent(silent):
    """Suppress (True) or restore (False) output() messages."""
    global _silent
    _silent = silent


def output(message="", output_handler=None):
    """
    Output a message unless silent mode is enabled.

    Args:
        message: The message to output.
        output_handler: Optional custom handler for this call. If None, uses global handler.
    """
    if _silent:
        return
    handler = output_handler if output_handler is not None else _output_handler
    handler(message)


def run_cli(args=None):
    """
    Run the command-line interface and return the process exit code.

    Args:
        args: Arguments without the program name; defaults to sys.argv[1:].
    """
    import bladeprof.configure  # noqa: F401  registers the commands
    from bladeprof import cli
    from bladeprof import command
    from bladeprof import help
    from bladeprof import logging
    from bladeprof.blade_core import NumericalFailure

    args = sys.argv[1:] if args is None else list(args)
    try:
        parsed = cli.parse_cli_args(args)
    except cli.CliUsageError as e:
        logging.log_error(_scope=_SCOPE, _message=f"Error: {e}")
        return EXIT_CONFIG_ERROR

    logging.apply_logging_config(parsed["logging"])
    set_silent(bool(parsed["logging"].get(LOG_SILENT_PARAM) or parsed["logging"].get(LOG_NO_LOGGING_PARAM)))
    options = parsed["options"]
    command_name = parsed["command"]

    if options[OPTION_HELP]:
        if command_name:
            help.display_command_help(command_name)
        else:
            help.display_all_help()
        return EXIT_OK
    if command_name is None:
        logging.log_error(_scope=_SCOPE, _message="Error: no command given")
        help.display_all_help()
        return EXIT_CONFIG_ERROR

    try:
        result = command.run_command(command_name, options[OPTION_SPEC], options[OPTION_OUT])
    except command.CommandParameterError as e:
        logging.log_error(_scope=_SCOPE, _message=f"Error: {e}")
        help.display_command_help(e.command_name)
        return EXIT_CONFIG_ERROR
    except ValueError as e:
        logging.log_error(_scope=_SCOPE, _message=f"Error: {e}")
        return EXIT_CONFIG_ERROR
    except NumericalFailure as e:
        logging.log_error(_scope=_SCOPE, _message=f"Numerical failure: {e}")
        return EXIT_NUMERIC_FAILURE
    except OSError as e:
        logging.log_error(_scope=_SCOPE, _message=f"I/O error: {e}")
        return EXIT_IO_ERROR

    output(result.summary)
    return EXIT_OK if result.ok else EXIT_NUMERIC_FAILURE


def main():
    """Console script entry point."""
    sys.exit(run_cli())
