"""Request execution for the faultlab mock server."""

import logging
from functools import lru_cache

from django.conf import settings
from graphql import GraphQLError, graphql_sync
from graphql import parse as parse_graphql
from graphql import validate as validate_graphql

from ..query import Field, FragmentSpread, OperationKind, parse_query
from ..schema import to_graphql_schema
from .data import DataGenerator
from .faults import get_fault
from .fixtures import Fixture

logger = logging.getLogger(__name__)

INTROSPECTION_FIELDS = frozenset({'__schema', '__type'})


def _root_field_names(doc, selection_set):
    for selection in selection_set:
        if isinstance(selection, FragmentSpread):
            selection = doc.inline(selection)
        if isinstance(selection, Field):
            yield selection.name
        else:
            yield from _root_field_names(doc, selection.selection_set)


class FaultLab:
    """Answers GraphQL requests for one fixture."""

    def __init__(self, fixture):
        self.fixture = fixture
        self.graphql_schema = to_graphql_schema(fixture.schema)
        self.faults = [get_fault(spec.kind)(spec) for spec in fixture.faults]

    def execute(self, query, variables=None, operation_name=None):
        """Return ``(status, body)`` for one GraphQL request."""
        if not isinstance(query, str) or not query.strip():
            return 400, {'errors': [{'message': "Request carries no query"}]}
        try:
            document = parse_graphql(query)
        except GraphQLError as exc:
            return 400, {'errors': [exc.formatted]}
        errors = validate_graphql(self.graphql_schema, document)
        if errors:
            return 400, {'errors': [error.formatted for error in errors]}

        doc = parse_query(query, operation_name)
        if INTROSPECTION_FIELDS & set(_root_field_names(doc, doc.selection_set)):
            result = graphql_sync(
                self.graphql_schema, query,
                variable_values=variables, operation_name=operation_name,
            )
            return 200, result.formatted
        if doc.operation_kind is OperationKind.MUTATION:
            return 200, {'data': None, 'errors': [{'message': "faultlab does not execute mutations"}]}

        resolution = DataGenerator(self.fixture.schema, self.fixture.seed, variables).resolve(doc)
        for fault in self.faults:
            fault.apply(resolution)
        return resolution.status, resolution.body()


@lru_cache(maxsize=None)
def default_lab():
    """The lab configured by the HARVESTLAB settings."""
    config = settings.HARVESTLAB
    fixture = Fixture.load(
        config['FAULTLAB_SCHEMA'], config['FAULTLAB_SEED'], tuple(config['FAULTLAB_FAULTS'])
    )
    return FaultLab(fixture)


def lab_for(request):
    return getattr(request, 'harvestlab', None) or default_lab()
