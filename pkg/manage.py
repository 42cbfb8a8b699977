#!/usr/bin/env python
"""harvestlab command-line entry point (record, generate, run, coverage, report, faultlab)."""
import os
import sys


def main():
    """Run a harvestlab subcommand."""
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'harvestlab.settings')
    try:
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            "Couldn't import Django. Are you sure it's installed?"
        ) from exc
    execute_from_command_line(sys.argv)


if __name__ == '__main__':
    main()
