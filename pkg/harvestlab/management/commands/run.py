"""Replay a manifest against a GraphQL endpoint."""

import subprocess

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from ...suite import run, run_pre_hook
from ..artifacts import IO_ERROR, TEST_FAILURE, manifest_from, write_json


def parse_header(text):
    name, sep, value = text.partition(':')
    if not sep or not name.strip():
        raise CommandError(f"Headers look like 'Name: value', got {text!r}", returncode=IO_ERROR)
    return name.strip(), value.strip()


class Command(BaseCommand):
    help = "Run the generated tests against an endpoint and write a JSON report."

    def add_arguments(self, parser):
        config = settings.HARVESTLAB
        parser.add_argument('--manifest', default='manifest.jsonl')
        parser.add_argument('--endpoint', required=True)
        parser.add_argument('--parallelism', type=int, default=config['RUN_PARALLELISM'])
        parser.add_argument('--timeout', type=float, default=config['RUN_TIMEOUT'], help="seconds per request")
        parser.add_argument('--pre-hook', default=None, help="shell command to run before the suite")
        parser.add_argument('--header', action='append', default=[], help="extra request header, 'Name: value'")
        parser.add_argument('--report', default='report.json')

    def handle(self, *args, **options):
        if options['parallelism'] < 1:
            raise CommandError("--parallelism must be at least 1", returncode=IO_ERROR)
        cases = manifest_from(options['manifest'])
        headers = dict(parse_header(header) for header in options['header'])
        if options['pre_hook']:
            try:
                run_pre_hook(options['pre_hook'])
            except subprocess.CalledProcessError as e:
                raise CommandError(f"Pre-hook failed with exit status {e.returncode}", returncode=IO_ERROR)

        result = run(
            cases, options['endpoint'],
            parallelism=options['parallelism'], timeout=options['timeout'], headers=headers,
        )
        write_json(options['report'], result.to_dict())

        totals = result.totals
        self.stdout.write(
            f"{totals['tests']} test(s): {totals['passing']} passing, {totals['failing']} failing, "
            f"{totals['assertions_evaluated']} assertion(s) evaluated"
        )
        if not result.passed:
            raise CommandError(f"{totals['failing']} of {totals['tests']} test(s) failed", returncode=TEST_FAILURE)
