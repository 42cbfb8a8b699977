"""Summarize a pipeline run."""

from django.core.management.base import BaseCommand

from ...reporting import build_summary
from ..artifacts import manifest_from, schema_from, store_from, suite_result_from, write_json


class Command(BaseCommand):
    help = "Render the metric table of a run and group failing assertions."

    def add_arguments(self, parser):
        parser.add_argument('--store', required=True)
        parser.add_argument('--manifest', default='manifest.jsonl')
        parser.add_argument('--report', default=None, help="run report written by 'manage.py run'")
        parser.add_argument('--schema', required=True)
        parser.add_argument('--out', default=None, help="also write the summary as JSON")
        parser.add_argument('--include-mutations', action='store_true')

    def handle(self, *args, **options):
        store = store_from(options['store'])
        cases = manifest_from(options['manifest'])
        suite_result = suite_result_from(options['report']) if options['report'] else None
        schema = schema_from(options['schema'])

        summary = build_summary(
            store.records(), cases, suite_result, schema,
            include_mutations=options['include_mutations'],
        )
        if options['out']:
            write_json(options['out'], summary.to_dict())
        self.stdout.write(summary.render_text(), ending='')
