"""Scoped logging for the solvers and the command line.

Every message carries a scope, normally the name of the module that emits
it (`dynamics`, `inverse`, `config`, ...). Records go to standard error:
warnings and below through the console handler, errors through a separate
error handler, so a run's one-line summary is the only thing on standard
output. A log file is written only when a log directory is configured.
"""
import logging as stdlib_logging
import os
import sys
from datetime import datetime

from bladeprof.constants.logging import (
    LOG_DIR_PARAM,
    LOG_LEVEL_PARAM,
    LOG_NO_LOGGING_PARAM,
    LOG_SILENT_PARAM,
    LOG_SUPPRESS_ERRORS_PARAM,
    LOG_TRACE_PARAM,
    LOG_VERBOSE_PARAM,
)

# Integrator step detail sits below DEBUG
TRACE = 5
stdlib_logging.addLevelName(TRACE, "TRACE")

DEBUG = stdlib_logging.DEBUG
INFO = stdlib_logging.INFO
WARNING = stdlib_logging.WARNING
ERROR = stdlib_logging.ERROR
CRITICAL = stdlib_logging.CRITICAL
DISABLED = CRITICAL + 1

LEVELS_BY_NAME = {
    'TRACE': TRACE,
    'DEBUG': DEBUG,
    'INFO': INFO,
    'WARNING': WARNING,
    'ERROR': ERROR,
    'CRITICAL': CRITICAL,
}

LOGGER_NAME = 'bladeprof'

_DEFAULT_SCOPE = LOGGER_NAME
_DEFAULT_FILE_LEVEL = DEBUG
_DEFAULT_CONSOLE_LEVEL = WARNING

# (console level, file level) per level switch; None keeps the default
_SWITCH_LEVELS = {
    LOG_TRACE_PARAM: (TRACE, TRACE),
    LOG_VERBOSE_PARAM: (DEBUG, None),
    LOG_SILENT_PARAM: (DISABLED, None),
    LOG_NO_LOGGING_PARAM: (DISABLED, DISABLED),
}

_logger = None
_file_handler = None
_console_handler = None
_error_handler = None
_current_scope = None
_log_dir = None
_file_level = _DEFAULT_FILE_LEVEL
_suppress_errors = False
_scope_log_levels = {}


class CustomFormatter(stdlib_logging.Formatter):
    """Render `[MM-dd hh:mm:ss.sss][scope][LEVEL] message`."""

    def format(self, record):
        stamp = datetime.now().strftime('%m-%d %H:%M:%S.%f')[:-3]
        scope = getattr(record, 'scope', _current_scope or _DEFAULT_SCOPE)
        return f"[{stamp}][{scope}][{record.levelname}] {record.getMessage()}"


class _BelowErrorFilter(stdlib_logging.Filter):

    def filter(self, record):
        return record.levelno < ERROR


def _stream_handler(level, below_error=False):
    handler = stdlib_logging.StreamHandler(sys.stderr)
    handler.setLevel(level)
    if below_error:
        handler.addFilter(_BelowErrorFilter())
    handler.setFormatter(CustomFormatter())
    return handler


def _open_log_file():
    """Open `log-{yyyy-MM-dd-hh.mm.ss}.log` in the configured log directory."""
    os.makedirs(_log_dir, exist_ok=True)
    name = f"log-{datetime.now().strftime('%Y-%m-%d-%H.%M.%S')}.log"
    handler = stdlib_logging.FileHandler(os.path.join(_log_dir, name))
    handler.setLevel(_file_level)
    handler.setFormatter(CustomFormatter())
    return handler


def _init_logger():
    global _logger, _console_handler, _error_handler
    if _logger is not None:
        return
    _logger = stdlib_logging.getLogger(LOGGER_NAME)
    _logger.setLevel(TRACE)
    _logger.propagate = False
    _console_handler = _stream_handler(_DEFAULT_CONSOLE_LEVEL, below_error=True)
    _error_handler = _stream_handler(DISABLED if _suppress_errors else ERROR)
    for handler in (_console_handler, _error_handler):
        _logger.addHandler(handler)


def reset_logging():
    """Close every handler and forget all levels, scopes and the log directory.

    Handlers are recreated on the next message, bound to whatever
    sys.stderr is at that point.
    """
    global _logger, _file_handler, _console_handler, _error_handler
    global _current_scope, _log_dir, _file_level, _suppress_errors, _scope_log_levels
    named = stdlib_logging.getLogger(LOGGER_NAME)
    for handler in list(named.handlers):
        named.removeHandler(handler)
        handler.close()
    _logger = _file_handler = _console_handler = _error_handler = None
    _current_scope = _log_dir = None
    _file_level = _DEFAULT_FILE_LEVEL
    _suppress_errors = False
    _scope_log_levels = {}


def set_current_scope(scope):
    """Scope used for messages logged without one; None restores the default."""
    global _current_scope
    _current_scope = scope


def set_log_dir(log_dir):
    """Start (or restart) file logging into log_dir."""
    global _log_dir, _file_handler
    _init_logger()
    _log_dir = log_dir
    if _file_handler is not None:
        _logger.removeHandler(_file_handler)
        _file_handler.close()
    _file_handler = _open_log_file()
    _logger.addHandler(_file_handler)


def set_file_level(level):
    global _file_level
    _file_level = level
    if _file_handler is not None:
        _file_handler.setLevel(level)


def set_console_level(level):
    _init_logger()
    _console_handler.setLevel(level)


def set_suppress_errors(suppress):
    """Turn the stderr error handler off (True) or back on (False)."""
    global _suppress_errors
    _init_logger()
    _suppress_errors = suppress
    _error_handler.setLevel(DISABLED if suppress else ERROR)


def set_scope_log_level(scope, level):
    """Drop messages of one scope below level, whatever the handler levels are."""
    _scope_log_levels[scope] = level


def get_scope_log_level(scope):
    return _scope_log_levels.get(scope)


def log(_level=INFO, _scope=None, _message=''):
    """Log _message at _level under _scope (or the current scope)."""
    _init_logger()
    scope = _scope or _current_scope or _DEFAULT_SCOPE
    threshold = _scope_log_levels.get(scope)
    if threshold is not None and _level < threshold:
        return
    _logger.log(_level, _message, extra={'scope': scope})


def log_trace(_scope=None, _message=''):
    log(TRACE, _scope, _message)


def log_debug(_scope=None, _message=''):
    log(DEBUG, _scope, _message)


def log_info(_scope=None, _message=''):
    log(INFO, _scope, _message)


def log_warning(_scope=None, _message=''):
    log(WARNING, _scope, _message)


def log_error(_scope=None, _message=''):
    log(ERROR, _scope, _message)


def _get_level_from_name(level_name):
    """Level number for a case-insensitive level name; unknown names give INFO."""
    return LEVELS_BY_NAME.get(level_name.upper(), INFO)


def apply_logging_config(options):
    """Set handler levels from the logging options of a parsed command line.

    The level switches are mutually exclusive (the command line rejects
    combinations), so at most one of them is present. --suppress-errors
    silences every handler on top of whatever the switch chose.

    Args:
        options: Dict keyed by the LOG_* option names.
    """
    _init_logger()
    console_level, file_level = _DEFAULT_CONSOLE_LEVEL, _DEFAULT_FILE_LEVEL

    if options.get(LOG_LEVEL_PARAM):
        console_level = file_level = _get_level_from_name(options[LOG_LEVEL_PARAM])
    else:
        for switch, (console, file) in _SWITCH_LEVELS.items():
            if options.get(switch):
                console_level = console
                file_level = file if file is not None else file_level
                break

    set_file_level(file_level)
    set_console_level(console_level)

    if options.get(LOG_DIR_PARAM) and file_level < DISABLED:
        set_log_dir(options[LOG_DIR_PARAM])

    if options.get(LOG_SUPPRESS_ERRORS_PARAM):
        set_suppress_errors(True)
        set_console_level(DISABLED)
        set_file_level(DISABLED)
