"""Tests for file.py module."""

import os

import pytest
from unittest.mock import patch

from bladeprof import file as bladeprof_file

requires_non_root = pytest.mark.skipif(
    hasattr(os, 'geteuid') and os.geteuid() == 0,
    reason="root can read files without read permission")


def _missing(tmp_path):
    return tmp_path / "absent.cfg"


def _directory(tmp_path):
    path = tmp_path / "specs"
    path.mkdir()
    return path


def _binary(tmp_path):
    path = tmp_path / "profile.csv"
    path.write_bytes(b'# bladeprof v1\n\x00\x01')
    return path


@pytest.mark.parametrize("make_path, error, message", [
    (_missing, FileNotFoundError, "File not found:"),
    (_directory, IsADirectoryError, "Path is a directory"),
    (_binary, ValueError, "File appears to be binary"),
])
def test_unusable_paths_are_rejected_before_reading(tmp_path, make_path, error, message):
    """Test that missing, directory and binary paths fail validation with the path in the message."""
    path = make_path(tmp_path)
    with pytest.raises(error, match=message) as excinfo:
        bladeprof_file._validate_file_for_reading(str(path))
    assert str(path) in str(excinfo.value)


@requires_non_root
@pytest.mark.parametrize("reader", [
    bladeprof_file._validate_file_for_reading,
    bladeprof_file._read_file_raw,
])
def test_unreadable_spec_raises_permission_error(tmp_path, reader):
    """Test that a spec without read permission is refused by both helpers."""
    spec_file = tmp_path / "run.cfg"
    spec_file.write_text("problem = check\n")
    spec_file.chmod(0o000)
    try:
        with pytest.raises(PermissionError, match="Permission denied reading file"):
            reader(str(spec_file))
    finally:
        spec_file.chmod(0o644)


def test_validate_file_for_reading_expands_user(tmp_path):
    """Test that ~ is expanded against HOME."""
    (tmp_path / "run.cfg").write_text("problem = check\n")
    with patch.dict(os.environ, {'HOME': str(tmp_path)}):
        assert bladeprof_file._validate_file_for_reading("~/run.cfg") == str(tmp_path / "run.cfg")


def test_read_file_raw_returns_contents(tmp_path):
    """Test that a UTF-8 spec is returned verbatim, comments included."""
    spec_file = tmp_path / "run.cfg"
    spec_file.write_text("problem = check\n# résumé\n", encoding='utf-8')
    assert bladeprof_file._read_file_raw(str(spec_file)) == "problem = check\n# résumé\n"


def test_read_file_raw_rejects_latin1_text(tmp_path):
    """Test that text in another encoding is a ValueError, not a crash."""
    spec_file = tmp_path / "run.cfg"
    spec_file.write_bytes("# température\nproblem = check\n".encode('latin-1'))
    with pytest.raises(ValueError, match="invalid text encoding"):
        bladeprof_file._read_file_raw(str(spec_file))


def test_write_text_atomic_creates_and_replaces(tmp_path):
    """Test that the target is written, then replaced whole on a second write."""
    target = tmp_path / "out.csv"
    assert bladeprof_file.write_text_atomic(str(target), "first\n") == str(target)
    bladeprof_file.write_text_atomic(str(target), "second\n")

    assert target.read_text() == "second\n"
    assert [path.name for path in tmp_path.iterdir()] == ["out.csv"]


def test_write_text_atomic_keeps_newlines_unix(tmp_path):
    """Test that rows are separated by bare newlines on every platform."""
    target = tmp_path / "out.csv"
    bladeprof_file.write_text_atomic(str(target), "a\nb\n")

    assert target.read_bytes() == b"a\nb\n"


def test_write_text_atomic_failure_leaves_no_temporary_file(tmp_path):
    """Test that a failed replace removes the temporary file and keeps the old target."""
    target = tmp_path / "out.csv"
    target.write_text("old\n")

    with patch.object(bladeprof_file.os, 'replace', side_effect=OSError("disk full")):
        with pytest.raises(OSError, match="disk full"):
            bladeprof_file.write_text_atomic(str(target), "new\n")

    assert target.read_text() == "old\n"
    assert [path.name for path in tmp_path.iterdir()] == ["out.csv"]


def test_write_text_atomic_missing_directory(tmp_path):
    """Test that writing into a missing directory raises FileNotFoundError."""
    with pytest.raises(FileNotFoundError):
        bladeprof_file.write_text_atomic(str(tmp_path / "missing" / "out.csv"), "x\n")
