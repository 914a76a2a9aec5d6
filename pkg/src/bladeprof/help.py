from bladeprof.constants.command import (
    COMMAND_DESCRIPTION,
    COMMAND_REQUIRES_SPEC,
    HELP_ALIASES,
    OUT_ALIASES,
    PROGRAM_NAME,
    SPEC_ALIASES,
)
from bladeprof.constants.logging import (
    LOG_DIR_PARAM,
    LOG_LEVEL_PARAM,
    LOG_NO_LOGGING_PARAM,
    LOG_SILENT_PARAM,
    LOG_SUPPRESS_ERRORS_PARAM,
    LOG_TRACE_PARAM,
    LOG_VERBOSE_PARAM,
    LOGGING_HELP_GROUP,
    LOGGING_TOGGLE_ALIASES,
    LOGGING_VALUE_ALIASES,
)

_OPTION_DESCRIPTIONS = [
    (SPEC_ALIASES, '<file>', 'Run specification (key = value lines)'),
    (OUT_ALIASES, '<path>', 'Output file, overrides output.path'),
    (HELP_ALIASES, '', 'Display help information'),
]

_LOGGING_DESCRIPTIONS = {
    LOG_VERBOSE_PARAM: 'Log DEBUG and above to the console',
    LOG_TRACE_PARAM: 'Log everything to the console and log file',
    LOG_SILENT_PARAM: 'Silence console logging and the run summary',
    LOG_NO_LOGGING_PARAM: 'Disable console and file logging',
    LOG_SUPPRESS_ERRORS_PARAM: 'Do not report errors on stderr',
    LOG_DIR_PARAM: 'Also write a log file into this directory',
    LOG_LEVEL_PARAM: 'Console and file level (TRACE..CRITICAL)',
}


def _get_all_commands():
    from bladeprof import command
    return command.get_all_commands()


def _format_option_row(aliases, placeholder, description):
    aliases_str = ', '.join(aliases)
    if placeholder:
        aliases_str = f"{aliases_str} {placeholder}"
    return f"  {aliases_str:<28} {description}"


def _print_options():
    print("Options:")
    for aliases, placeholder, description in _OPTION_DESCRIPTIONS:
        print(_format_option_row(aliases, placeholder, description))
    print()
    print(f"  {LOGGING_HELP_GROUP}:")
    for name, aliases in LOGGING_TOGGLE_ALIASES.items():
        print(_format_option_row(aliases, '', _LOGGING_DESCRIPTIONS.get(name, '')))
    for name, aliases in LOGGING_VALUE_ALIASES.items():
        print(_format_option_row(aliases, '<value>', _LOGGING_DESCRIPTIONS.get(name, '')))
    print()


def display_all_help():
    """Display usage, the command table and all options."""
    commands = _get_all_commands()
    print()
    print(f"Usage: {PROGRAM_NAME} <command> [--spec <file>] [--out <path>] [options]")
    print()
    if commands:
        print("Available Commands:")
        print(f"  {'Command':<12} {'Description'}")
        print(f"  {'-' * 12} {'-' * 50}")
        for cmd_name in sorted(commands.keys()):
            print(f"  {cmd_name:<12} {commands[cmd_name].get(COMMAND_DESCRIPTION, '')}")
        print()
    _print_options()


def display_command_help(command_name):
    """Show description and usage of one command; unknown names fall back to the overview."""
    cmd = _get_all_commands().get(command_name)
    if not cmd:
        print(f"Unknown command: {command_name}")
        print()
        display_all_help()
        return

    print(f"Command: {command_name}")
    print()
    print(f"Description: {cmd.get(COMMAND_DESCRIPTION, '')}")
    print()
    spec_usage = '--spec <file>' if cmd.get(COMMAND_REQUIRES_SPEC) else '[--spec <file>]'
    print(f"Usage: {PROGRAM_NAME} {command_name} {spec_usage} [--out <path>]")
    print()
    _print_options()
