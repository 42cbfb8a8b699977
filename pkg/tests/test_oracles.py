"""Tests for oracle derivation and validation."""

import copy
import json

import pytest
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from harvestlab.exceptions import UnknownFieldError, UnsupportedOperationError
from harvestlab.faultlab import conformant_response
from harvestlab.oracles import (
    Check,
    CheckKind,
    OracleTree,
    Verdict,
    count_planned_assertions,
    derive_oracles,
    validate,
)
from harvestlab.query import parse_query
from harvestlab.schema import RefKind, TypeKind, parse_sdl

from .strategies import queries, schemas

LISTS_SDL = """
type Query {
  plain: [String]
  list: [String]!
  items: [String!]
  both: [String!]!
}
"""

DELETE = object()

NULLABILITY_MATRIX = [
    ('plain', None, True),
    ('plain', [None], True),
    ('plain', ['a'], True),
    ('list', None, False),
    ('list', [None], True),
    ('list', ['a'], True),
    ('items', None, True),
    ('items', [None], False),
    ('items', ['a'], True),
    ('both', None, False),
    ('both', [None], False),
    ('both', ['a'], True),
]


def oracles_for(schema, text):
    return derive_oracles(schema, parse_query(text))


def kinds(checks):
    return [check.kind for check in checks]


def body(document):
    return json.dumps(document).encode()


@pytest.fixture
def teasers_tree(teaser_schema, get_teasers):
    return oracles_for(teaser_schema, get_teasers)


class TestDeriveOracles:
    """Tests for derive_oracles."""

    def test_get_teasers_tree(self, teasers_tree):
        (teasers,) = teasers_tree.root
        assert kinds(teasers.checks) == [CheckKind.PRESENT, CheckKind.IS_LIST]
        assert teasers.item_checks == ((),)
        by_key = {child.response_key: child for child in teasers.children}
        assert kinds(by_key['title'].checks) == [CheckKind.PRESENT, CheckKind.NOT_NULL, CheckKind.IS_STRING]
        assert kinds(by_key['subTitle'].checks) == [CheckKind.PRESENT, CheckKind.IS_STRING]
        assert kinds(by_key['url'].checks) == [CheckKind.PRESENT, CheckKind.NOT_NULL, CheckKind.IS_STRING]
        assert by_key['__typename'].checks == (Check(CheckKind.TYPENAME_EQUALS, ('Teaser',)),)
        assert by_key['__typename'].expected_typename == 'Teaser'

    def test_root_typename(self, teaser_schema):
        tree = oracles_for(teaser_schema, '{ __typename }')
        (oracle,) = tree.root
        assert oracle.checks == (Check(CheckKind.TYPENAME_EQUALS, ('Query',)),)

    def test_object_field_is_a_map(self, teaser_schema):
        (video,) = oracles_for(teaser_schema, '{ video(id: "1") { videoType } }').root
        assert kinds(video.checks) == [CheckKind.PRESENT, CheckKind.IS_MAP]
        (video_type,) = video.children
        assert video_type.checks[-1] == Check(
            CheckKind.ENUM_MEMBER, ('ANALYST_VIEW', 'COMPANY_PRESENTATION', 'INTERVIEW'),
        )

    def test_abstract_typename(self, teaser_schema):
        (video,) = oracles_for(teaser_schema, '{ video(id: "1") { ... on Node { __typename } } }').root
        (typename,) = video.children
        assert typename.checks == (Check(CheckKind.TYPENAME_IN, ('Video',)),)
        assert typename.expected_typename is None

    def test_narrowing_fragment_is_conditional(self):
        schema = parse_sdl("type A { x: Int }\ntype B { y: Int }\nunion U = A | B\ntype Query { u: U }")
        (u,) = oracles_for(schema, '{ u { __typename ... on A { x } } }').root
        by_key = {child.response_key: child for child in u.children}
        assert by_key['x'].applies_to == ('A',)
        assert by_key['__typename'].applies_to is None

    def test_custom_scalar_checks_nullability_only(self):
        schema = parse_sdl("scalar Date\ntype Query { today: Date! }")
        (today,) = oracles_for(schema, '{ today }').root
        assert kinds(today.checks) == [CheckKind.PRESENT, CheckKind.NOT_NULL]

    def test_float_and_int(self):
        schema = parse_sdl("type Query { ratio: Float count: Int flag: Boolean }")
        ratio, count, flag = oracles_for(schema, '{ ratio count flag }').root
        assert ratio.checks[-1].kind is CheckKind.IS_NUMERIC
        assert count.checks[-1].kind is CheckKind.IS_INT
        assert flag.checks[-1].kind is CheckKind.IS_BOOL

    def test_unknown_field(self, teaser_schema):
        with pytest.raises(UnknownFieldError):
            oracles_for(teaser_schema, '{ teasers(first: 2) { price } }')

    def test_mutations_are_refused(self):
        schema = parse_sdl("type Query { a: Int }\ntype Mutation { save: Boolean }")
        with pytest.raises(UnsupportedOperationError):
            oracles_for(schema, 'mutation { save }')

    def test_serialization_keeps_url_not_null(self, teasers_tree):
        data = teasers_tree.to_dict()
        url = next(child for child in data['root'][0]['children'] if child['key'] == 'url')
        assert {'kind': 'NOT_NULL'} in url['checks']
        assert OracleTree.from_dict(json.loads(json.dumps(data))) == teasers_tree


class TestValidate:
    """Tests for evaluating an oracle tree against a response."""

    def test_worked_example_counts_22(self, teasers_tree, teasers_body):
        report = validate(teasers_tree, 200, teasers_body)
        assert report.passed
        assert report.assertions_evaluated == 22

    def test_planned_assertions(self, teasers_tree, teasers_response):
        assert count_planned_assertions(teasers_tree, teasers_response) == 22

    def test_null_url_fails(self, teasers_tree, teasers_response):
        teasers_response['data']['teasers'][1]['url'] = None
        report = validate(teasers_tree, 200, body(teasers_response))
        assert not report.passed
        (failure,) = report.failures
        assert failure.path == 'data.teasers[1].url'
        assert failure.check.kind is CheckKind.NOT_NULL
        assert failure.field == 'Teaser.url'

    def test_server_error_stops_after_status(self, teasers_tree):
        report = validate(teasers_tree, 500, b'{"errors": [{"message": "boom"}]}')
        assert report.assertions_evaluated == 1
        assert report.failures[0].check.kind is CheckKind.STATUS_IS_200

    def test_body_that_is_not_json(self, teasers_tree):
        report = validate(teasers_tree, 200, b'<html>oops</html>')
        assert report.assertions_evaluated == 2
        assert report.failures[0].path == 'body'

    def test_json_array_body(self, teasers_tree):
        report = validate(teasers_tree, 200, b'[]')
        assert report.failures[0].check.kind is CheckKind.BODY_IS_JSON_OBJECT

    def test_errors_member(self, teasers_tree, teasers_response):
        teasers_response['errors'] = [{'message': 'Internal error'}]
        report = validate(teasers_tree, 200, body(teasers_response))
        assert report.assertions_evaluated == 3
        assert report.failures[0].check.kind is CheckKind.NO_ERRORS_MEMBER

    def test_missing_key_fails_presence(self, teasers_tree, teasers_response):
        del teasers_response['data']['teasers'][0]['subTitle']
        report = validate(teasers_tree, 200, body(teasers_response))
        (failure,) = report.failures
        assert failure.path == 'data.teasers[0].subTitle'
        assert failure.check.kind is CheckKind.PRESENT
        assert failure.observed == '<missing>'

    def test_wrong_typename(self, teasers_tree, teasers_response):
        teasers_response['data']['teasers'][0]['__typename'] = 'Video'
        (failure,) = validate(teasers_tree, 200, body(teasers_response)).failures
        assert failure.check.kind is CheckKind.TYPENAME_EQUALS

    def test_number_where_string_expected(self, teasers_tree, teasers_response):
        teasers_response['data']['teasers'][0]['title'] = 42
        (failure,) = validate(teasers_tree, 200, body(teasers_response)).failures
        assert failure.check.kind is CheckKind.IS_STRING
        assert failure.observed == '42'

    def test_list_answered_with_a_string(self, teasers_tree):
        report = validate(teasers_tree, 200, body({'data': {'teasers': 'not-a-list'}}))
        (failure,) = report.failures
        assert failure.check.kind is CheckKind.IS_LIST

    def test_null_list_is_allowed_when_nullable(self, teasers_tree):
        report = validate(teasers_tree, 200, body({'data': {'teasers': None}}))
        assert report.passed
        assert report.assertions_evaluated == 4

    def test_missing_data_member(self, teasers_tree):
        report = validate(teasers_tree, 200, body({}))
        (failure,) = report.failures
        assert failure.path == 'data.teasers'

    def test_outcomes_are_serializable(self, teasers_tree, teasers_response):
        teasers_response['data']['teasers'][1]['url'] = None
        data = validate(teasers_tree, 200, body(teasers_response)).to_dict()
        failing = [outcome for outcome in data['outcomes'] if outcome['verdict'] == 'FAIL']
        assert failing == [{
            'path': 'data.teasers[1].url',
            'check': 'NOT_NULL',
            'verdict': 'FAIL',
            'observed': 'null',
            'field': 'Teaser.url',
        }]

    @pytest.mark.parametrize('field,value,passes', NULLABILITY_MATRIX)
    def test_nullability_matrix(self, field, value, passes):
        tree = oracles_for(parse_sdl(LISTS_SDL), f'{{ {field} }}')
        assert validate(tree, 200, body({'data': {field: value}})).passed is passes


class TestConditionalOracles:
    """Tests for oracles that hold only for some runtime types."""

    SDL = "type A { x: Int! }\ntype B { y: Int! }\nunion U = A | B\ntype Query { u: U! }"

    def test_fragment_for_other_type_is_ignored(self):
        tree = oracles_for(parse_sdl(self.SDL), '{ u { __typename ... on A { x } } }')
        report = validate(tree, 200, body({'data': {'u': {'__typename': 'B'}}}))
        assert report.passed

    def test_fragment_for_matching_type_is_checked(self):
        tree = oracles_for(parse_sdl(self.SDL), '{ u { __typename ... on A { x } } }')
        report = validate(tree, 200, body({'data': {'u': {'__typename': 'A', 'x': None}}}))
        assert [failure.check.kind for failure in report.failures] == [CheckKind.NOT_NULL]

    def test_without_typename_checks_are_skipped(self):
        tree = oracles_for(parse_sdl(self.SDL), '{ u { ... on A { x } } }')
        report = validate(tree, 200, body({'data': {'u': {'x': 1}}}))
        assert report.passed
        assert [outcome.verdict for outcome in report.skipped] == [Verdict.SKIPPED] * 3
        assert report.assertions_evaluated == 6


def sites(oracles, obj, path='data'):
    """``(path, container, key, oracle)`` for every unconditional field present in a response."""
    for oracle in oracles:
        if oracle.applies_to is not None or oracle.is_typename or oracle.response_key not in obj:
            continue
        field_path = f"{path}.{oracle.response_key}"
        yield field_path, obj, oracle.response_key, oracle
        yield from _sites_below(oracle, obj[oracle.response_key], field_path)


def _sites_below(oracle, value, path):
    if isinstance(value, list):
        for index, item in enumerate(value):
            yield from _sites_below(oracle, item, f"{path}[{index}]")
    elif isinstance(value, dict):
        yield from sites(oracle.children, value, path)


def mutations(schema, oracle):
    """``(replacement, expected failing check)`` pairs that break a conformant value of ``oracle``."""
    declared = oracle.declared_type
    non_null = declared.kind is RefKind.NON_NULL
    outer = declared.of_type if non_null else declared
    named = declared.named_type
    found = [(DELETE, CheckKind.PRESENT)]
    if outer.kind is RefKind.LIST:
        found.append(('scalar', CheckKind.IS_LIST))
        return found
    if non_null and schema.is_leaf(named):
        found.append((None, CheckKind.NOT_NULL))
    if named == 'String':
        found.append((42, CheckKind.IS_STRING))
    if schema.get(named) is not None and schema.get(named).kind is TypeKind.ENUM:
        found.append(('NOT_A_MEMBER', CheckKind.ENUM_MEMBER))
    return found


class TestGeneratedResponses:
    """Oracles against seeded responses for random schemas and queries."""

    @settings(max_examples=300, deadline=None, suppress_health_check=[HealthCheck.too_slow])
    @given(data=st.data(), seed=st.integers(min_value=0, max_value=2 ** 16))
    def test_planned_count_matches_evaluated(self, data, seed):
        schema = parse_sdl(data.draw(schemas()).sdl)
        doc = parse_query(data.draw(queries(schema)))
        tree = derive_oracles(schema, doc)
        document = conformant_response(schema, doc, seed)
        report = validate(tree, 200, body(document))
        assert report.passed, [outcome.to_dict() for outcome in report.failures]
        assert count_planned_assertions(tree, document) == report.assertions_evaluated

    @settings(max_examples=500, deadline=None, suppress_health_check=[HealthCheck.too_slow])
    @given(data=st.data(), seed=st.integers(min_value=0, max_value=2 ** 16))
    def test_single_corruption_is_caught_where_it_happens(self, data, seed):
        schema = parse_sdl(data.draw(schemas()).sdl)
        doc = parse_query(data.draw(queries(schema)))
        tree = derive_oracles(schema, doc)
        document = copy.deepcopy(conformant_response(schema, doc, seed))
        candidates = [
            (path, container, key, replacement, expected)
            for path, container, key, oracle in sites(tree.root, document['data'])
            for replacement, expected in mutations(schema, oracle)
        ]
        assume(candidates)
        path, container, key, replacement, expected = data.draw(st.sampled_from(candidates))
        if replacement is DELETE:
            del container[key]
        else:
            container[key] = replacement

        report = validate(tree, 200, body(document))
        assert not report.passed
        assert (path, expected) in {(failure.path, failure.check.kind) for failure in report.failures}


class TestChecks:
    """Tests for single check evaluation."""

    def test_int_is_32_bit(self):
        check = Check(CheckKind.IS_INT)
        assert check.evaluate(2 ** 31 - 1)
        assert not check.evaluate(2 ** 31)
        assert check.evaluate(3.0)
        assert not check.evaluate(3.5)

    def test_booleans_are_not_numbers(self):
        assert not Check(CheckKind.IS_INT).evaluate(True)
        assert not Check(CheckKind.IS_NUMERIC).evaluate(False)
        assert Check(CheckKind.IS_BOOL).evaluate(False)

    def test_enum_member(self):
        check = Check(CheckKind.ENUM_MEMBER, ('INTERVIEW',))
        assert check.evaluate('INTERVIEW')
        assert not check.evaluate('interview')

    def test_str(self):
        assert str(Check(CheckKind.TYPENAME_IN, ('A', 'B'))) == 'TYPENAME_IN(A, B)'
