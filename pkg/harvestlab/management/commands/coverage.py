"""Schema coverage of a manifest."""

import json
import logging
from pathlib import Path

from django.core.management.base import BaseCommand, CommandError

from ...coverage import coverage_of, coverage_universe, diff, tuples_from_json
from ...exceptions import HarvestLabError
from ...query import parse_query
from ..artifacts import IO_ERROR, manifest_from, require_file, schema_from, write_json

logger = logging.getLogger(__name__)


def load_tuple_set(path):
    require_file(path, 'Tuple set', "Pass a JSON array of {\"object\", \"field\"} or a coverage report.")
    try:
        data = json.loads(Path(path).read_text(encoding='utf-8'))
        if isinstance(data, dict):
            data = data['tuples']
        return tuples_from_json(data)
    except (ValueError, KeyError, TypeError) as e:
        raise CommandError(f"{path} is not a tuple set: {e}", returncode=IO_ERROR)


class Command(BaseCommand):
    help = "Compute the schema coverage of a manifest, optionally against another tuple set."

    def add_arguments(self, parser):
        parser.add_argument('--schema', required=True)
        parser.add_argument('--manifest', default='manifest.jsonl')
        parser.add_argument('--against', default=None, help="tuple set of a reference suite")
        parser.add_argument('--out', default='coverage.json')
        parser.add_argument('--include-mutations', action='store_true')

    def handle(self, *args, **options):
        schema = schema_from(options['schema'])
        docs = []
        for case in manifest_from(options['manifest']):
            try:
                docs.append(parse_query(case.query, case.operation_name))
            except HarvestLabError as e:
                logger.warning("Ignoring case %s: %s", case.id, e)
        try:
            report = coverage_of(docs, schema, include_mutations=options['include_mutations'])
        except HarvestLabError as e:
            raise CommandError(f"Manifest does not fit the schema: {e}", returncode=IO_ERROR)

        data = report.to_dict()
        if options['against']:
            universe = coverage_universe(schema, options['include_mutations'])
            suite_diff = diff(load_tuple_set(options['against']), report.covered_tuples, universe)
            data['diff'] = suite_diff.to_dict()
            data['distinct_tuples'] = suite_diff.distinct_tuples
        write_json(options['out'], data)
        self.stdout.write(
            f"SCHEMA_COV {report.schema_cov_percent} ({len(report.covered_tuples)}/{report.schema_tuples}), "
            f"entry points {report.entry_points_covered}/{report.entry_points_total}"
        )
