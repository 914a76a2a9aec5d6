import re

from bladeprof import command
from bladeprof import logging
from bladeprof.constants.command import (
    HELP_ALIASES,
    OPTION_HELP,
    OPTION_OUT,
    OPTION_SPEC,
    OUT_ALIASES,
    SPEC_ALIASES,
)
from bladeprof.constants.logging import (
    LOG_LEVEL_NAMES,
    LOG_LEVEL_PARAM,
    LOG_LEVEL_SWITCHES,
    LOGGING_TOGGLE_ALIASES,
    LOGGING_VALUE_ALIASES,
)

_SCOPE = 'cli'

# An alias (--long-name or -s), optionally followed by =value
_ALIAS_PATTERN = re.compile(r'^(-{1,2}[\w][\w-]*)(?:=(.*))?$')


class CliUsageError(ValueError):
    """Raised for an invalid command line."""
    pass


def _build_alias_table():
    """Map every alias to (option name, group, takes_value)."""
    table = {}
    for alias in SPEC_ALIASES:
        table[alias] = (OPTION_SPEC, 'options', True)
    for alias in OUT_ALIASES:
        table[alias] = (OPTION_OUT, 'options', True)
    for alias in HELP_ALIASES:
        table[alias] = (OPTION_HELP, 'options', False)
    for name, aliases in LOGGING_TOGGLE_ALIASES.items():
        for alias in aliases:
            table[alias] = (name, 'logging', False)
    for name, aliases in LOGGING_VALUE_ALIASES.items():
        for alias in aliases:
            table[alias] = (name, 'logging', True)
    return table


_ALIASES = _build_alias_table()


def _tokenise_cli_args(args):
    """Split arguments into command tokens and alias entries.

    Values are taken from `--alias=value` or from the following argument
    when the alias takes a value.

    Returns:
        Dict with structure:
        {
            "commands": [command_names],
            "params": [{"alias": "--name", "value": "val1"}]
        }

    Raises:
        CliUsageError: On an unknown alias or a missing value.
    """
    parsed = {"commands": [], "params": []}
    position = 0
    while position < len(args):
        token = args[position]
        position += 1
        match = _ALIAS_PATTERN.match(token)
        if not match:
            parsed["commands"].append(token)
            continue
        alias, value = match.group(1), match.group(2)
        if alias not in _ALIASES:
            raise CliUsageError(f"Unknown option: {alias}")
        _, _, takes_value = _ALIASES[alias]
        if takes_value and value is None:
            if position >= len(args):
                raise CliUsageError(f"Option {alias} requires a value")
            value = args[position]
            position += 1
        elif not takes_value and value is not None:
            raise CliUsageError(f"Option {alias} does not take a value")
        parsed["params"].append({"alias": alias, "value": value})
    return parsed


def parse_cli_args(args):
    """Parse the command line into a command name and option dicts.

    Args:
        args: Arguments without the program name.

    Returns:
        Dict with keys "command" (name or None), "options" (spec, out,
        help) and "logging" (LOG_* option names to values).

    Raises:
        CliUsageError: On unknown or repeated options, several commands,
            an unknown command or conflicting logging level switches.
    """
    tokens = _tokenise_cli_args(args)
    options = {OPTION_SPEC: None, OPTION_OUT: None, OPTION_HELP: False}
    logging_options = {}
    seen = set()
    for entry in tokens["params"]:
        name, group, takes_value = _ALIASES[entry["alias"]]
        if name in seen and takes_value:
            raise CliUsageError(f"Option {entry['alias']} given more than once")
        seen.add(name)
        value = entry["value"] if takes_value else True
        if group == 'options':
            options[name] = value
        else:
            logging_options[name] = value

    switches = [name for name in LOG_LEVEL_SWITCHES if logging_options.get(name)]
    if len(switches) > 1:
        raise CliUsageError(f"Logging options are mutually exclusive: {', '.join(switches)}")
    level = logging_options.get(LOG_LEVEL_PARAM)
    if level is not None and level.upper() not in LOG_LEVEL_NAMES:
        raise CliUsageError(f"Unknown log level '{level}'; expected one of {LOG_LEVEL_NAMES}")

    commands = tokens["commands"]
    if len(commands) > 1:
        raise CliUsageError(f"Only one command may be given, got {commands}")
    command_name = commands[0] if commands else None
    if command_name is not None and not command.is_command(command_name):
        raise CliUsageError(f"Unknown command: {command_name}")

    logging.log_trace(_scope=_SCOPE, _message=f"Parsed command line: command={command_name}, options={options}")
    return {"command": command_name, "options": options, "logging": logging_options}
