"""Logging configuration constants.

These constants define logging-related option names, their command-line
aliases and help grouping for the toolkit's logging system.
"""

# Logging Option Names
LOG_VERBOSE_PARAM = 'log-verbose'
LOG_TRACE_PARAM = 'log-trace'
LOG_SILENT_PARAM = 'log-silent'
LOG_NO_LOGGING_PARAM = 'log-no-logging'
LOG_SUPPRESS_ERRORS_PARAM = 'log-suppress-errors'
LOG_DIR_PARAM = 'log-dir'
LOG_LEVEL_PARAM = 'log-level'

# Aliases per option
LOGGING_TOGGLE_ALIASES = {
    LOG_VERBOSE_PARAM: ['--verbose', '-v'],
    LOG_TRACE_PARAM: ['--trace'],
    LOG_SILENT_PARAM: ['--silent'],
    LOG_NO_LOGGING_PARAM: ['--no-logging'],
    LOG_SUPPRESS_ERRORS_PARAM: ['--suppress-errors'],
}
LOGGING_VALUE_ALIASES = {
    LOG_DIR_PARAM: ['--log-dir'],
    LOG_LEVEL_PARAM: ['--log-level'],
}

# Mutually exclusive level switches
LOG_LEVEL_SWITCHES = [
    LOG_VERBOSE_PARAM,
    LOG_TRACE_PARAM,
    LOG_SILENT_PARAM,
    LOG_NO_LOGGING_PARAM,
    LOG_LEVEL_PARAM,
]

LOG_LEVEL_NAMES = ['CRITICAL', 'ERROR', 'WARNING', 'INFO', 'DEBUG', 'TRACE']

# Help Grouping
LOGGING_HELP_GROUP = 'Logging Options'
