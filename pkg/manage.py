#!/usr/bin/env python
"""Command-line entry point for the posetaut analysis commands."""
import os
import sys


def main():
    """Run a posetaut management command; ``export-dot`` and ``corpus-verify`` are accepted as spelled."""
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "posetaut_project.settings")
    try:
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            "Couldn't import Django. Are you sure it's installed and "
            "available on your PYTHONPATH environment variable? Did you "
            "forget to activate a virtual environment?"
        ) from exc
    from cli.runner import command_name
    argv = list(sys.argv)
    if len(argv) > 1 and not argv[1].startswith('-'):
        argv[1] = command_name(argv[1])
    execute_from_command_line(argv)


if __name__ == "__main__":
    main()
