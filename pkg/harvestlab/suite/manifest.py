"""JSON-Lines test manifest, one case per line."""

import json
from pathlib import Path

from ..exceptions import FormatError
from .cases import TestCase


def export_manifest(cases, path):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open('w', encoding='utf-8') as manifest:
        for case in cases:
            manifest.write(json.dumps(case.to_dict(), sort_keys=True) + '\n')


def import_manifest(path):
    cases = []
    with Path(path).open(encoding='utf-8') as manifest:
        for number, line in enumerate(manifest, start=1):
            if not line.strip():
                continue
            try:
                cases.append(TestCase.from_dict(json.loads(line)))
            except (ValueError, KeyError, TypeError) as exc:
                raise FormatError(f"{path}:{number}: not a manifest entry ({exc})") from exc
    return cases
