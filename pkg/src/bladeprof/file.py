"""Reading run specifications and profile tables, and writing result files.

Readers check the path before opening it so that a bad --spec or
profile.file gives a message naming the file. Writers go through a
temporary file so a failed run never leaves a partial result behind.
"""

import os
import tempfile

from bladeprof import logging

_SCOPE = 'file'

# Bytes inspected for NUL when deciding a file is binary
_BINARY_PROBE_SIZE = 8192


def _validate_file_for_reading(file_path):
    """Resolve file_path (with ~ expansion) and make sure it is a readable text file.

    Returns:
        The expanded path.

    Raises:
        FileNotFoundError, IsADirectoryError, PermissionError: For unusable paths.
        ValueError: If the first bytes contain NUL.
    """
    path = os.path.expanduser(file_path)
    if not os.path.exists(path):
        raise FileNotFoundError(f"File not found: {path}")
    if os.path.isdir(path):
        raise IsADirectoryError(f"Path is a directory, not a file: {path}")
    if not os.access(path, os.R_OK):
        raise PermissionError(f"Permission denied reading file: {path}")
    with open(path, 'rb') as probe:
        if b'\x00' in probe.read(_BINARY_PROBE_SIZE):
            raise ValueError(f"File appears to be binary: {path}")
    return path


def _read_file_raw(path):
    """Return the UTF-8 text of a validated file."""
    path = _validate_file_for_reading(path)
    try:
        with open(path, 'r', encoding='utf-8') as source:
            return source.read()
    except UnicodeDecodeError:
        raise ValueError(f"File contains invalid text encoding: {path}")


def write_text_atomic(path, text):
    """Write text to path through a temporary file in the same directory.

    The target is replaced only after the full contents are on disk, so a
    failure leaves any previous file untouched and no partial file behind.

    Raises:
        OSError: If the directory is missing or not writable.
    """
    expanded_path = os.path.expanduser(path)
    directory = os.path.dirname(os.path.abspath(expanded_path))
    handle, temp_path = tempfile.mkstemp(prefix='.bladeprof-', dir=directory)
    try:
        with os.fdopen(handle, 'w', encoding='utf-8', newline='\n') as file_handle:
            file_handle.write(text)
        os.replace(temp_path, expanded_path)
    except BaseException:
        if os.path.exists(temp_path):
            os.remove(temp_path)
        raise
    logging.log_debug(_scope=_SCOPE, _message=f"Wrote {len(text)} characters to {expanded_path}")
    return expanded_path
