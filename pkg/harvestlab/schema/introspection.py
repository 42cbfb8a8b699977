"""Schema ingestion from introspection results, files and live endpoints."""

import json
import logging
from collections.abc import Mapping
from pathlib import Path

import httpx
from graphql import GraphQLError, build_client_schema, get_introspection_query

from ..exceptions import FormatError
from .sdl import from_graphql_schema, parse_sdl

logger = logging.getLogger(__name__)


def ingest_introspection(introspection_json):
    """Build a SchemaModel from a standard introspection result.

    Accepts the full response (``{"data": {"__schema": ...}}``) or its
    ``data`` member.
    """
    if not isinstance(introspection_json, Mapping):
        raise FormatError("Introspection result must be a JSON object")
    payload = introspection_json
    if isinstance(payload.get('data'), Mapping):
        payload = payload['data']
    if not isinstance(payload.get('__schema'), Mapping):
        raise FormatError("Introspection result lacks the __schema envelope")
    try:
        gql_schema = build_client_schema(payload)
    except (GraphQLError, TypeError, ValueError, KeyError) as exc:
        raise FormatError(f"Unusable introspection result: {exc}") from exc
    return from_graphql_schema(gql_schema)


def fetch_introspection(endpoint, headers=None, timeout=30.0, transport=None):
    """POST the standard introspection query to ``endpoint`` and return the decoded body."""
    with httpx.Client(headers=headers, timeout=timeout, transport=transport) as client:
        response = client.post(endpoint, json={'query': get_introspection_query()})
    response.raise_for_status()
    try:
        return response.json()
    except ValueError as exc:
        raise FormatError(f"{endpoint} answered introspection with non-JSON content") from exc


def load_schema(source, headers=None, timeout=30.0):
    """Load a schema from an SDL file, an introspection JSON file or an endpoint URL."""
    source = str(source)
    if source.startswith(('http://', 'https://')):
        logger.info("Fetching schema by introspection from %s", source)
        return ingest_introspection(fetch_introspection(source, headers=headers, timeout=timeout))
    path = Path(source)
    text = path.read_text(encoding='utf-8')
    if path.suffix == '.json':
        return ingest_introspection(json.loads(text))
    return parse_sdl(text)
