"""Pytest configuration and fixtures."""

import json

import pytest

from harvestlab.schema import parse_sdl

from .factories import GET_TEASERS, TEASER_SDL, TEASERS_RESPONSE


@pytest.fixture
def teaser_sdl():
    return TEASER_SDL


@pytest.fixture
def teaser_schema():
    return parse_sdl(TEASER_SDL)


@pytest.fixture
def get_teasers():
    return GET_TEASERS


@pytest.fixture
def teasers_response():
    """The worked-example response; a fresh copy per test."""
    return json.loads(json.dumps(TEASERS_RESPONSE))


@pytest.fixture
def teasers_body():
    return json.dumps(TEASERS_RESPONSE).encode()


@pytest.fixture
def schema_file(tmp_path):
    path = tmp_path / 'teasers.graphql'
    path.write_text(TEASER_SDL, encoding='utf-8')
    return path
