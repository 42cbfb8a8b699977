"""Tests for case generation, the manifest and the runner."""

import json
import subprocess

import httpx
import pytest

from harvestlab.exceptions import FormatError
from harvestlab.oracles import CheckKind
from harvestlab.suite import (
    GenerationReport,
    SuiteResult,
    export_manifest,
    generate,
    import_manifest,
    run,
    run_pre_hook,
)

from .factories import GET_TEASERS, fault, faultlab_transport, make_record

ENDPOINT = 'http://faultlab/graphql/'
STALE_QUERY = 'query Prices { teasers(first: 1) { price } }'


@pytest.fixture
def records():
    return [
        make_record(GET_TEASERS, times_called=5),
        make_record('query Titles { teasers(first: 3) { title } }'),
        make_record('{ video(id: "1") { id url } }'),
    ]


@pytest.fixture
def cases(records, teaser_schema):
    return generate(records, teaser_schema)


class TestGenerate:
    """Tests for generate."""

    def test_one_case_per_query_record(self, cases, records):
        assert [case.id for case in cases] == [
            f"GetTeasers-{records[0].key.short()}",
            f"Titles-{records[1].key.short()}",
            f"anonymous-{records[2].key.short()}",
        ]

    def test_case_carries_its_origin(self, cases):
        origin = cases[0].origin
        assert origin.times_called == 5
        assert origin.created_at == '2021-05-03 12:00:00'
        assert [(t.object_name, t.field_name) for t in origin.covered_tuples] == [
            ('Query', 'teasers'), ('Teaser', 'subTitle'), ('Teaser', 'title'), ('Teaser', 'url'),
        ]

    def test_payload(self, cases):
        assert cases[0].payload() == {'query': GET_TEASERS, 'variables': {}, 'operationName': 'GetTeasers'}

    def test_mutations_are_skipped(self, teaser_schema):
        report = GenerationReport()
        cases = generate([make_record('mutation Save { save }'), make_record(GET_TEASERS)], teaser_schema, report)
        assert len(cases) == 1
        assert report.mutations_skipped == 1

    def test_stale_queries_are_reported(self, teaser_schema):
        report = GenerationReport()
        stale = make_record(STALE_QUERY)
        assert generate([stale], teaser_schema, report) == []
        assert report.to_dict()['stale'] == [{
            'key': stale.key.hex,
            'operation_name': 'Prices',
            'error': 'UnknownFieldError',
            'message': "Type 'Teaser' has no field 'price' at 'teasers.price'",
        }]

    def test_generation_is_deterministic(self, records, teaser_schema):
        first = [case.to_dict() for case in generate(records, teaser_schema)]
        second = [case.to_dict() for case in generate(records, teaser_schema)]
        assert first == second


class TestManifest:
    """Tests for the JSON-Lines manifest."""

    def test_export_then_import(self, tmp_path, cases):
        path = tmp_path / 'out' / 'manifest.jsonl'
        export_manifest(cases, path)
        assert len(path.read_text(encoding='utf-8').splitlines()) == 3
        assert import_manifest(path) == cases

    def test_lines_have_sorted_keys(self, tmp_path, cases):
        path = tmp_path / 'manifest.jsonl'
        export_manifest(cases[:1], path)
        entry = json.loads(path.read_text(encoding='utf-8'))
        assert list(entry) == sorted(entry)

    def test_bad_line_is_located(self, tmp_path, cases):
        path = tmp_path / 'manifest.jsonl'
        export_manifest(cases[:1], path)
        with path.open('a', encoding='utf-8') as manifest:
            manifest.write('{"id": "broken"}\n')
        with pytest.raises(FormatError) as excinfo:
            import_manifest(path)
        assert f"{path}:2" in str(excinfo.value)


class TestRun:
    """Tests for replaying cases."""

    def test_conformant_endpoint_passes(self, cases, teaser_schema):
        result = run(cases, ENDPOINT, parallelism=2, transport=faultlab_transport(teaser_schema))
        assert result.passed
        assert result.totals['tests'] == 3
        assert result.totals['failing'] == 0
        assert result.totals['assertions_evaluated'] > 0

    def test_results_are_sorted_by_case_id(self, cases, teaser_schema):
        result = run(list(reversed(cases)), ENDPOINT, transport=faultlab_transport(teaser_schema))
        assert [r.case_id for r in result.results] == sorted(case.id for case in cases)

    def test_fault_fails_the_cases_that_reach_it(self, cases, teaser_schema):
        transport = faultlab_transport(teaser_schema, faults=[fault('HTTP_5XX', {'entry_point': 'video'})])
        result = run(cases, ENDPOINT, transport=transport)
        assert result.totals['failing'] == 1
        (failed,) = [r for r in result.results if not r.passed]
        assert failed.case_id.startswith('anonymous-')
        assert failed.status_code == 500
        assert failed.report.failures[0].check.kind is CheckKind.STATUS_IS_200

    def test_unreachable_endpoint(self, cases):
        def refuse(request):
            raise httpx.ConnectError("connection refused", request=request)

        result = run(cases, ENDPOINT, transport=httpx.MockTransport(refuse))
        assert result.totals['failing'] == 3
        failure = result.results[0].report.failures[0]
        assert failure.path == 'request'
        assert failure.check.kind is CheckKind.TRANSPORT
        assert result.results[0].status_code is None

    def test_undecodable_body_fails_every_case(self, cases):
        def broken_gzip(request):
            return httpx.Response(200, headers={'content-encoding': 'gzip'}, stream=httpx.ByteStream(b'not gzip'))

        result = run(cases, ENDPOINT, transport=httpx.MockTransport(broken_gzip))
        assert result.totals['failing'] == len(cases)
        failure = result.results[0].report.failures[0]
        assert failure.path == 'request'
        assert failure.check.kind is CheckKind.TRANSPORT
        assert failure.observed.startswith('DecodingError')

    def test_headers_are_sent(self, cases):
        seen = []

        def endpoint(request):
            seen.append(request.headers.get('authorization'))
            return httpx.Response(200, json={'data': None})

        run(cases[:1], ENDPOINT, headers={'Authorization': 'Bearer t'}, transport=httpx.MockTransport(endpoint))
        assert seen == ['Bearer t']

    def test_parallelism_must_be_positive(self, cases):
        with pytest.raises(ValueError):
            run(cases, ENDPOINT, parallelism=0)

    def test_empty_suite(self):
        result = run([], ENDPOINT, transport=httpx.MockTransport(lambda request: httpx.Response(200)))
        assert result.totals == {'tests': 0, 'passing': 0, 'failing': 0, 'assertions_evaluated': 0}

    def test_report_reads_back(self, cases, teaser_schema):
        transport = faultlab_transport(teaser_schema, faults=[fault('HTTP_5XX', {'entry_point': 'video'})])
        result = run(cases, ENDPOINT, transport=transport)
        restored = SuiteResult.from_dict(json.loads(json.dumps(result.to_dict())))
        assert restored.totals == result.totals
        assert [r.passed for r in restored.results] == [r.passed for r in result.results]


class TestPreHook:
    """Tests for the pre-run hook."""

    def test_success(self, tmp_path):
        marker = tmp_path / 'reset'
        run_pre_hook(f'touch "{marker}"')
        assert marker.exists()

    def test_failure_is_raised(self):
        with pytest.raises(subprocess.CalledProcessError):
            run_pre_hook('exit 3')
