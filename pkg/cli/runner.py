"""
Entry point mapping ``posetaut <command> ...`` onto the management commands.

The hyphenated spellings (``export-dot``, ``corpus-verify``) are accepted.
"""
import sys
from importlib import import_module

COMMANDS = (
    'validate', 'analyze', 'decompose', 'bound', 'ratio', 'count', 'generate', 'export_dot', 'corpus_verify',
)


def command_name(name):
    return name.replace('-', '_')


def run(argv, stdout=None, stderr=None):
    """Runs one command and returns its exit status: 0, 1 for invariant violations, 2 for usage errors."""
    if not argv:
        (stderr or sys.stderr).write(f"usage: posetaut <command> [options]; commands: {', '.join(COMMANDS)}\n")
        return 2
    name = command_name(argv[0])
    if name not in COMMANDS:
        (stderr or sys.stderr).write(f"unknown command {argv[0]!r}; commands: {', '.join(COMMANDS)}\n")
        return 2
    command = import_module(f"cli.management.commands.{name}").Command(stdout=stdout, stderr=stderr)
    try:
        command.run_from_argv(['posetaut', name, *argv[1:]])
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    return 0
