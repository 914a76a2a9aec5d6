"""Tests for command.py module."""
import pytest

import bladeprof.configure  # noqa: F401
from bladeprof import command
from bladeprof.command import CommandParameterError
from bladeprof.config import RunSpecError
from bladeprof.constants.command import (
    COMMAND_ACTION,
    COMMAND_DESCRIPTION,
    COMMAND_NAME,
    COMMAND_REQUIRES_SPEC,
)


@pytest.fixture(autouse=True)
def restore_commands():
    """Keep the registry as configure left it."""
    saved = dict(command._commands)
    yield
    command._commands.clear()
    command._commands.update(saved)


def _echo(run_spec, out_path):
    return (run_spec, out_path)


def _sample_command(name='sample', requires_spec=False):
    return {
        COMMAND_NAME: name,
        COMMAND_DESCRIPTION: "Sample command",
        COMMAND_ACTION: _echo,
        COMMAND_REQUIRES_SPEC: requires_spec,
    }


def test_builtin_commands_are_registered():
    """Test that configure registers every problem as a command."""
    assert sorted(command.get_all_commands()) == ['check', 'forward', 'geometry', 'inverse', 'render']
    assert command.is_command('forward')
    assert not command.is_command('optimise')


def test_add_command_registers_command():
    """Test that a registered command can be fetched by name."""
    command.add_command(_sample_command())
    assert command.get_command('sample')[COMMAND_DESCRIPTION] == "Sample command"


def test_add_command_same_definition_is_noop():
    """Test that re-registering an identical definition is accepted."""
    command.add_commands([_sample_command(), _sample_command()])
    assert command.is_command('sample')


def test_add_command_conflicting_definition_raises():
    """Test that a second, different definition under the same name is rejected."""
    command.add_command(_sample_command())
    with pytest.raises(ValueError, match="already registered"):
        command.add_command(_sample_command(requires_spec=True))


@pytest.mark.parametrize("change, message", [
    ({COMMAND_NAME: ''}, "name cannot be empty"),
    ({COMMAND_ACTION: 'run'}, "no callable action"),
    ({COMMAND_DESCRIPTION: ''}, "no description"),
])
def test_add_command_validation(change, message):
    """Test that incomplete command definitions are rejected."""
    cmd = _sample_command()
    cmd.update(change)
    with pytest.raises(ValueError, match=message):
        command.add_command(cmd)


def test_get_all_commands_returns_copy():
    """Test that callers cannot mutate the registry through the returned dict."""
    command.get_all_commands().clear()
    assert command.is_command('forward')


def test_run_command_without_spec():
    """Test that a command with an optional spec runs with run_spec None."""
    command.add_command(_sample_command())
    assert command.run_command('sample', None, 'out.csv') == (None, 'out.csv')


def test_run_command_requires_spec():
    """Test that a missing --spec raises CommandParameterError naming the command."""
    with pytest.raises(CommandParameterError, match="requires a run specification") as excinfo:
        command.run_command('forward')
    assert excinfo.value.command_name == 'forward'


def test_run_command_loads_spec(tmp_path):
    """Test that the spec file is parsed and handed to the action."""
    path = tmp_path / "run.cfg"
    path.write_text("problem = check\nframe.b = 1\nframe.m0 = -1\nlaw.kind = constant\nlaw.params = 0.5\n")
    command._commands["check"] = _sample_command("check")
    run_spec, out_path = command.run_command('check', str(path))
    assert run_spec.problem == 'check'
    assert run_spec.law.domain == (0.5, 1.0)
    assert out_path is None


def test_run_command_problem_mismatch(tmp_path):
    """Test that a spec for another problem is reported at the problem line."""
    path = tmp_path / "run.cfg"
    path.write_text("# inverse run\nproblem = inverse\nlaw.kind = constant\nlaw.params = 0.5\nframe.b = 1\nframe.m0 = -1\n")
    with pytest.raises(RunSpecError, match="does not match command 'forward' at line 2"):
        command.run_command('forward', str(path))


def test_run_command_unknown_name():
    """Test that running an unregistered command is an error."""
    with pytest.raises(ValueError, match="Unknown command 'optimise'"):
        command.run_command('optimise')
