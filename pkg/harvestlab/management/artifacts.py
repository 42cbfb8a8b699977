"""Loading and writing of the files the subcommands exchange."""

import json
from datetime import timedelta
from pathlib import Path

import httpx
from django.core.management.base import CommandError
from django.utils import timezone

from ..exceptions import HarvestLabError
from ..recorder.store import QueryStore, parse_timestamp
from ..schema import load_schema
from ..suite import SuiteResult, import_manifest

IO_ERROR = 2
TEST_FAILURE = 1


def missing(what, path, hint):
    return CommandError(f"{what} not found: {path}. {hint}", returncode=IO_ERROR)


def require_file(path, what, hint):
    path = Path(path)
    if not path.is_file():
        raise missing(what, path, hint)
    return path


def schema_from(source):
    try:
        return load_schema(source)
    except FileNotFoundError:
        raise missing('Schema', source, "Pass an SDL file, an introspection JSON file or an endpoint URL.")
    except (HarvestLabError, httpx.HTTPError, OSError, ValueError) as e:
        raise CommandError(f"Could not load schema from {source}: {e}", returncode=IO_ERROR)


def store_from(directory):
    if not Path(directory).is_dir():
        raise missing('Query store', directory, "Record traffic first with 'manage.py record'.")
    return QueryStore(directory, readonly=True)


def manifest_from(path):
    require_file(path, 'Manifest', "Generate one with 'manage.py generate'.")
    try:
        return import_manifest(path)
    except HarvestLabError as e:
        raise CommandError(str(e), returncode=IO_ERROR)


def suite_result_from(path):
    require_file(path, 'Run report', "Produce one with 'manage.py run --report <file>'.")
    try:
        return SuiteResult.from_dict(json.loads(Path(path).read_text(encoding='utf-8')))
    except (ValueError, KeyError) as e:
        raise CommandError(f"{path} is not a run report: {e}", returncode=IO_ERROR)


def moment(text):
    """A CLI timestamp; naive values are read as UTC."""
    if text is None:
        return None
    try:
        return parse_timestamp(text)
    except ValueError:
        raise CommandError(f"Not a timestamp: {text} (use 'YYYY-MM-DD HH:MM:SS')", returncode=IO_ERROR)


def days_ago(days):
    return timezone.now() - timedelta(days=days)


def dump_json(data):
    return json.dumps(data, indent=2, sort_keys=True) + '\n'


def write_json(path, data):
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(dump_json(data), encoding='utf-8')
    except OSError as e:
        raise CommandError(f"Could not write {path}: {e}", returncode=IO_ERROR)
