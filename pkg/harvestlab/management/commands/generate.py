"""Generate a test manifest from the query store."""

import logging

from django.conf import settings
from django.core.management.base import BaseCommand

from ...recorder import FilterSpec
from ...suite import GenerationReport, export_manifest, generate
from ..artifacts import days_ago, moment, schema_from, store_from, write_json

logger = logging.getLogger(__name__)


class Command(BaseCommand):
    help = "Turn every recorded query into a test case with schema-derived oracles."

    def add_arguments(self, parser):
        parser.add_argument('--store', default=settings.HARVESTLAB['STORE_DIR'])
        parser.add_argument('--schema', required=True, help="SDL file, introspection JSON or endpoint URL")
        parser.add_argument('--out', default='manifest.jsonl')
        parser.add_argument('--min-calls', type=int, default=None)
        parser.add_argument('--since', default=None, help="only queries last seen at or after this UTC time")
        parser.add_argument('--until', default=None, help="only queries last seen at or before this UTC time")
        parser.add_argument('--within-days', type=int, default=None, help="shorthand for --since N days ago")
        parser.add_argument('--limit', type=int, default=None, help="keep only the N most called queries")
        parser.add_argument('--generation-report', default=None, help="write skipped records to this file")

    def handle(self, *args, **options):
        store = store_from(options['store'])
        schema = schema_from(options['schema'])
        since = moment(options['since'])
        if since is None and options['within_days'] is not None:
            since = days_ago(options['within_days'])
        records = store.export(FilterSpec(
            min_times_called=options['min_calls'],
            since=since,
            until=moment(options['until']),
            limit=options['limit'],
        ))

        report = GenerationReport()
        cases = generate(records, schema, report)
        export_manifest(cases, options['out'])
        if options['generation_report']:
            write_json(options['generation_report'], report.to_dict())
        self.stdout.write(
            f"Generated {len(cases)} test case(s) from {len(records)} record(s) into {options['out']} "
            f"({report.mutations_skipped} mutation(s) and {len(report.stale)} stale query(ies) skipped)"
        )
