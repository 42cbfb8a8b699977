"""Tests for the management commands and the run summary."""

import json
import re
from io import StringIO

import pytest
from django.core.management import call_command
from django.core.management.base import CommandError

from harvestlab.faultlab import Fixture, serve
from harvestlab.management.commands.run import parse_header
from harvestlab.query import canonicalize, parse_query
from harvestlab.recorder import QueryStore

from .factories import GET_TEASERS, MOMENT, fault

VIDEO_QUERY = 'query GetVideo { video(id: "1") { id title } }'


def command(name, **options):
    """Run a management command and return what it printed."""
    out = StringIO()
    call_command(name, stdout=out, **options)
    return out.getvalue()


def fill(directory, *queries):
    with QueryStore(directory) as store:
        for text in queries:
            doc = parse_query(text)
            store.record(
                canonicalize(doc), text, operation_name=doc.operation_name,
                now=MOMENT, operation_kind=doc.operation_kind,
            )
    return directory


@pytest.fixture
def store_dir(tmp_path):
    return fill(tmp_path / 'store', GET_TEASERS, GET_TEASERS, 'mutation Save { save }')


@pytest.fixture
def manifest(tmp_path, store_dir, schema_file):
    path = tmp_path / 'manifest.jsonl'
    command('generate', store=str(store_dir), schema=str(schema_file), out=str(path))
    return path


@pytest.fixture
def faultlab_url(teaser_schema):
    """Start faultlab servers on demand, each with the given faults."""
    handles = []

    def start(*faults):
        handle = serve(Fixture(teaser_schema, 0, faults))
        handles.append(handle)
        return f"{handle.url}/graphql/"

    yield start
    for handle in handles:
        handle.shutdown()


class TestGenerateCommand:
    """Tests for `manage.py generate`."""

    def test_writes_a_manifest(self, manifest):
        (entry,) = [json.loads(line) for line in manifest.read_text(encoding='utf-8').splitlines()]
        assert entry['operation_name'] == 'GetTeasers'
        assert entry['origin']['times_called'] == 2

    def test_output_is_deterministic(self, tmp_path, store_dir, schema_file):
        first, second = tmp_path / 'first.jsonl', tmp_path / 'second.jsonl'
        command('generate', store=str(store_dir), schema=str(schema_file), out=str(first))
        command('generate', store=str(store_dir), schema=str(schema_file), out=str(second))
        assert first.read_bytes() == second.read_bytes()

    def test_generation_report(self, tmp_path, store_dir, schema_file):
        report = tmp_path / 'skipped.json'
        out = command(
            'generate', store=str(store_dir), schema=str(schema_file),
            out=str(tmp_path / 'm.jsonl'), generation_report=str(report),
        )
        assert '1 mutation(s)' in out
        assert json.loads(report.read_text(encoding='utf-8')) == {'mutations_skipped': 1, 'stale': []}

    def test_filters(self, tmp_path, schema_file):
        store_dir = fill(tmp_path / 'store', GET_TEASERS, GET_TEASERS, VIDEO_QUERY)
        path = tmp_path / 'm.jsonl'
        command('generate', store=str(store_dir), schema=str(schema_file), out=str(path), min_calls=2)
        assert len(path.read_text(encoding='utf-8').splitlines()) == 1
        command(
            'generate', store=str(store_dir), schema=str(schema_file), out=str(path), since='2021-06-01 00:00:00',
        )
        assert path.read_text(encoding='utf-8') == ''

    def test_missing_store(self, tmp_path, schema_file):
        with pytest.raises(CommandError) as excinfo:
            command('generate', store=str(tmp_path / 'nowhere'), schema=str(schema_file))
        assert excinfo.value.returncode == 2

    def test_missing_schema(self, tmp_path, store_dir):
        with pytest.raises(CommandError) as excinfo:
            command('generate', store=str(store_dir), schema=str(tmp_path / 'missing.graphql'))
        assert excinfo.value.returncode == 2

    def test_bad_timestamp(self, tmp_path, store_dir, schema_file):
        with pytest.raises(CommandError) as excinfo:
            command('generate', store=str(store_dir), schema=str(schema_file), since='last tuesday')
        assert excinfo.value.returncode == 2


class TestRunCommand:
    """Tests for `manage.py run`."""

    def test_passing_suite(self, tmp_path, manifest, faultlab_url):
        report = tmp_path / 'report.json'
        out = command('run', manifest=str(manifest), endpoint=faultlab_url(), report=str(report))
        assert '1 passing, 0 failing' in out
        assert json.loads(report.read_text(encoding='utf-8'))['totals']['passing'] == 1

    def test_failing_suite_exits_1(self, tmp_path, manifest, faultlab_url):
        report = tmp_path / 'report.json'
        endpoint = faultlab_url(fault('NULL_NONNULL_FIELD', {'object': 'Teaser', 'field': 'url'}))
        with pytest.raises(CommandError) as excinfo:
            command('run', manifest=str(manifest), endpoint=endpoint, report=str(report))
        assert excinfo.value.returncode == 1
        assert json.loads(report.read_text(encoding='utf-8'))['totals']['failing'] == 1

    def test_missing_manifest(self, tmp_path):
        with pytest.raises(CommandError) as excinfo:
            command('run', manifest=str(tmp_path / 'none.jsonl'), endpoint='http://localhost:1/graphql/')
        assert excinfo.value.returncode == 2

    def test_failing_pre_hook(self, tmp_path, manifest):
        with pytest.raises(CommandError) as excinfo:
            command(
                'run', manifest=str(manifest), endpoint='http://localhost:1/graphql/',
                report=str(tmp_path / 'r.json'), pre_hook='exit 4',
            )
        assert excinfo.value.returncode == 2
        assert not (tmp_path / 'r.json').exists()

    def test_parallelism_must_be_positive(self, manifest):
        with pytest.raises(CommandError) as excinfo:
            command('run', manifest=str(manifest), endpoint='http://localhost:1/graphql/', parallelism=0)
        assert excinfo.value.returncode == 2

    def test_parse_header(self):
        assert parse_header('Authorization: Bearer a:b') == ('Authorization', 'Bearer a:b')
        with pytest.raises(CommandError):
            parse_header('no-colon')


class TestCoverageCommand:
    """Tests for `manage.py coverage`."""

    def test_coverage_of_the_manifest(self, tmp_path, manifest, schema_file):
        out_path = tmp_path / 'coverage.json'
        out = command('coverage', schema=str(schema_file), manifest=str(manifest), out=str(out_path))
        assert out.strip() == 'SCHEMA_COV 30.8% (4/13), entry points 1/2'
        assert json.loads(out_path.read_text(encoding='utf-8'))['covered_tuples'] == 4

    def test_output_is_deterministic(self, tmp_path, manifest, schema_file):
        first, second = tmp_path / 'a.json', tmp_path / 'b.json'
        command('coverage', schema=str(schema_file), manifest=str(manifest), out=str(first))
        command('coverage', schema=str(schema_file), manifest=str(manifest), out=str(second))
        assert first.read_bytes() == second.read_bytes()

    def test_against_a_reference_suite(self, tmp_path, manifest, schema_file):
        reference = tmp_path / 'reference.json'
        reference.write_text(json.dumps([
            {'object': 'Query', 'field': 'teasers'},
            {'object': 'Teaser', 'field': 'title'},
            {'object': 'Video', 'field': 'url'},
        ]), encoding='utf-8')
        out_path = tmp_path / 'coverage.json'
        command(
            'coverage', schema=str(schema_file), manifest=str(manifest),
            against=str(reference), out=str(out_path),
        )
        data = json.loads(out_path.read_text(encoding='utf-8'))
        assert data['distinct_tuples'] == 2
        assert data['diff']['counts'] == {
            'only_in_a': 1, 'only_in_b': 2, 'intersection': 2, 'uncovered_by_both': 8,
        }

    def test_reference_must_be_a_tuple_set(self, tmp_path, manifest, schema_file):
        reference = tmp_path / 'reference.json'
        reference.write_text('{"nothing": []}', encoding='utf-8')
        with pytest.raises(CommandError) as excinfo:
            command('coverage', schema=str(schema_file), manifest=str(manifest), against=str(reference))
        assert excinfo.value.returncode == 2


class TestReportCommand:
    """Tests for `manage.py report`."""

    def test_summary_of_a_passing_run(self, tmp_path, store_dir, manifest, schema_file, faultlab_url):
        report = tmp_path / 'report.json'
        command('run', manifest=str(manifest), endpoint=faultlab_url(), report=str(report))
        summary = tmp_path / 'summary.json'
        text = command(
            'report', store=str(store_dir), manifest=str(manifest), report=str(report),
            schema=str(schema_file), out=str(summary),
        )
        assert re.search(r'^SCHEMA_COV\s+30\.8%$', text, re.MULTILINE)
        assert re.search(r'^ASSERTIONS_EVALUATED\s+\d+$', text, re.MULTILINE)
        assert 'Failure groups' not in text
        data = json.loads(summary.read_text(encoding='utf-8'))
        assert data['UNIQUE_QUERIES'] == 1
        assert data['TYPES'] == 5
        assert data['ENTRY_POINTS'] == 2
        assert data['PASSING'] == 1
        assert data['FAILURE_GROUPS'] == []

    def test_one_fault_makes_one_group(self, tmp_path, store_dir, manifest, schema_file, faultlab_url):
        report = tmp_path / 'report.json'
        endpoint = faultlab_url(fault('NULL_NONNULL_FIELD', {'object': 'Teaser', 'field': 'url'}))
        with pytest.raises(CommandError):
            command('run', manifest=str(manifest), endpoint=endpoint, report=str(report))
        text = command(
            'report', store=str(store_dir), manifest=str(manifest), report=str(report), schema=str(schema_file),
        )
        assert 'Failure groups (1)' in text
        assert 'teasers  data.teasers[*].url  NOT_NULL [Teaser.url]' in text

    def test_empty_store(self, tmp_path, schema_file):
        store_dir = tmp_path / 'empty'
        QueryStore(store_dir).close()
        manifest = tmp_path / 'manifest.jsonl'
        command('generate', store=str(store_dir), schema=str(schema_file), out=str(manifest))
        summary = tmp_path / 'summary.json'
        command('report', store=str(store_dir), manifest=str(manifest), schema=str(schema_file), out=str(summary))
        data = json.loads(summary.read_text(encoding='utf-8'))
        assert data['UNIQUE_QUERIES'] == 0
        assert data['ASSERTIONS_EVALUATED'] == 0
        assert data['COVERED_TUPLES'] == 0
        assert data['SCHEMA_COV'] == '0.0%'
        assert data['SCHEMA_TUPLES'] == 13


class TestFaultlabCommand:
    """Tests for `manage.py faultlab` start-up errors."""

    def test_missing_schema(self, tmp_path):
        with pytest.raises(CommandError) as excinfo:
            command('faultlab', schema=str(tmp_path / 'missing.graphql'))
        assert excinfo.value.returncode == 2

    def test_invalid_fault(self, tmp_path, schema_file):
        spec = tmp_path / 'fault.json'
        spec.write_text(json.dumps({
            'id': 'bad', 'kind': 'NULL_NONNULL_FIELD', 'target': {'object': 'Teaser', 'field': 'price'},
        }), encoding='utf-8')
        with pytest.raises(CommandError) as excinfo:
            command('faultlab', schema=str(schema_file), faults=[str(spec)])
        assert excinfo.value.returncode == 2


class TestRecordCommand:
    """Tests for `manage.py record` start-up errors."""

    def test_upstream_is_required(self, tmp_path):
        with pytest.raises(CommandError) as excinfo:
            command('record', store=str(tmp_path / 'store'), upstream='')
        assert excinfo.value.returncode == 2
