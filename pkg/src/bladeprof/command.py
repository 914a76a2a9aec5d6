# Command registry and dispatch for the bladeprof CLI.
from bladeprof import logging
from bladeprof.config import RunSpecError, load_run_spec
from bladeprof.constants.command import (
    COMMAND_ACTION,
    COMMAND_DESCRIPTION,
    COMMAND_NAME,
    COMMAND_REQUIRES_SPEC,
    SPEC_ALIASES,
)

_SCOPE = 'cli'


class CommandParameterError(ValueError):
    """Raised when a command is missing a required option.

    Attributes:
        command_name: Name of the command that is missing the option.
    """
    def __init__(self, message, command_name=None):
        super().__init__(message)
        self.command_name = command_name


# Module state
# NOTE: Not thread-safe; one CLI run per process.
_commands = {}


def get_command(name):
    """Command definition registered under name, or None."""
    return _commands.get(name)


def get_all_commands():
    """Copy of the registry, keyed by command name."""
    return dict(_commands)


def is_command(arg):
    return arg in _commands


def _validate_command(cmd):
    """Validate that a command has a name, a description and a callable action.

    Raises:
        ValueError: If the command definition is incomplete.
    """
    name = cmd.get(COMMAND_NAME)
    if not name:
        raise ValueError("Command name cannot be empty")
    if not callable(cmd.get(COMMAND_ACTION)):
        raise ValueError(f"Command '{name}' has no callable action")
    if not cmd.get(COMMAND_DESCRIPTION):
        raise ValueError(f"Command '{name}' has no description")


def add_command(cmd):
    """Register a command definition.

    Re-registering an identical definition is a no-op.

    Raises:
        ValueError: If the definition is invalid or conflicts with an
            existing command of the same name.
    """
    _validate_command(cmd)
    name = cmd[COMMAND_NAME]
    existing = _commands.get(name)
    if existing is not None:
        if existing == cmd:
            return
        raise ValueError(f"Command '{name}' is already registered with a different definition")
    _commands[name] = dict(cmd)
    logging.log_trace(_scope=_SCOPE, _message=f"Registered command '{name}'")


def add_commands(command_list):
    """Register several command definitions in order."""
    for cmd in command_list:
        add_command(cmd)


def run_command(name, spec_path=None, out_path=None):
    """Load the run specification (if any) and run a command's action.

    Args:
        name: Registered command name.
        spec_path: Path of the run specification, or None.
        out_path: Output path overriding output.path, or None.

    Returns:
        The action's RunResult.

    Raises:
        CommandParameterError: If the command needs --spec and none was given.
        RunSpecError: If the specification is invalid or names another problem.
        ValueError: If name is not a registered command.
    """
    cmd = get_command(name)
    if cmd is None:
        raise ValueError(f"Unknown command '{name}'")
    if cmd.get(COMMAND_REQUIRES_SPEC) and not spec_path:
        raise CommandParameterError(
            f"Command '{name}' requires a run specification ({', '.join(SPEC_ALIASES)} <file>)",
            command_name=name)
    run_spec = None
    if spec_path:
        run_spec = load_run_spec(spec_path)
        if run_spec.problem != name:
            raise RunSpecError(f"problem '{run_spec.problem}' does not match command '{name}'",
                               run_spec.problem_line)
    logging.log_info(_scope=_SCOPE, _message=f"Running command '{name}'")
    return cmd[COMMAND_ACTION](run_spec, out_path)
