"""Evaluation of an OracleTree against one HTTP response."""

import json
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from .checks import MISSING, Check, CheckKind

SUMMARY_LIMIT = 60


class Verdict(str, Enum):
    PASS = 'PASS'
    FAIL = 'FAIL'
    SKIPPED = 'SKIPPED'


def summarize(value):
    """Short printable form of an observed value."""
    if value is MISSING:
        return '<missing>'
    if value is None:
        return 'null'
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, list):
        return f"list[{len(value)}]"
    if isinstance(value, dict):
        return f"object[{len(value)}]"
    text = json.dumps(value) if isinstance(value, str) else repr(value)
    if len(text) > SUMMARY_LIMIT:
        text = text[:SUMMARY_LIMIT - 3] + '...'
    return text


@dataclass(frozen=True)
class Outcome:
    path: str
    check: Check
    verdict: Verdict
    observed: str
    # "Type.field" of the oracle that produced the outcome
    field: Optional[str] = None

    def to_dict(self):
        data = {
            'path': self.path,
            'check': self.check.kind.value,
            'verdict': self.verdict.value,
            'observed': self.observed,
        }
        if self.check.values:
            data['expected'] = list(self.check.values)
        if self.field is not None:
            data['field'] = self.field
        return data

    @classmethod
    def from_dict(cls, data):
        return cls(
            path=data['path'],
            check=Check(CheckKind(data['check']), tuple(data.get('expected', ()))),
            verdict=Verdict(data['verdict']),
            observed=data['observed'],
            field=data.get('field'),
        )


@dataclass(frozen=True)
class ValidationReport:
    outcomes: Tuple[Outcome, ...]
    # conditional checks that could not be evaluated; never counted
    skipped: Tuple[Outcome, ...] = ()

    @property
    def assertions_evaluated(self):
        return len(self.outcomes)

    @property
    def failures(self):
        return tuple(outcome for outcome in self.outcomes if outcome.verdict is Verdict.FAIL)

    @property
    def passed(self):
        return not self.failures

    def to_dict(self):
        return {
            'passed': self.passed,
            'assertions_evaluated': self.assertions_evaluated,
            'outcomes': [outcome.to_dict() for outcome in self.outcomes],
            'skipped': [outcome.to_dict() for outcome in self.skipped],
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            outcomes=tuple(Outcome.from_dict(outcome) for outcome in data.get('outcomes', ())),
            skipped=tuple(Outcome.from_dict(outcome) for outcome in data.get('skipped', ())),
        )


class _Recorder:
    def __init__(self):
        self.outcomes = []
        self.skipped = []

    def add(self, path, check, ok, observed, field=None):
        verdict = Verdict.PASS if ok else Verdict.FAIL
        self.outcomes.append(Outcome(path, check, verdict, summarize(observed), field))
        return ok

    def skip(self, path, check, field):
        self.skipped.append(Outcome(path, check, Verdict.SKIPPED, '<no __typename>', field))

    def report(self):
        return ValidationReport(tuple(self.outcomes), tuple(self.skipped))


def _evaluate_level(oracle, value, level, path, recorder):
    checks = oracle.checks[1:] if level == 0 else oracle.item_checks[level - 1]
    for check in checks:
        if check.kind is CheckKind.NOT_NULL:
            if not recorder.add(path, check, value is not None, value, oracle.label):
                return
            continue
        if value is None:
            # nullable and null: nothing left to check at this level
            return
        ok = check.evaluate(value)
        recorder.add(path, check, ok, value, oracle.label)
        if check.kind is CheckKind.IS_LIST:
            if ok:
                for index, item in enumerate(value):
                    _evaluate_level(oracle, item, level + 1, f"{path}[{index}]", recorder)
            return
        if check.kind is CheckKind.IS_MAP and not ok:
            return
    if value is None or not oracle.children:
        return
    _walk(oracle.children, value if isinstance(value, dict) else {}, path, recorder)


def _walk(oracles, obj, path, recorder):
    typename = obj.get('__typename')
    for oracle in oracles:
        field_path = f"{path}.{oracle.response_key}"
        if oracle.applies_to is not None:
            if not isinstance(typename, str):
                for check in oracle.checks:
                    recorder.skip(field_path, check, oracle.label)
                continue
            if typename not in oracle.applies_to:
                continue
        value = obj.get(oracle.response_key, MISSING)
        if oracle.is_typename:
            check = oracle.checks[0]
            recorder.add(field_path, check, check.evaluate(value), value, oracle.label)
            continue
        present = oracle.checks[0]
        if not recorder.add(field_path, present, value is not MISSING, value, oracle.label):
            continue
        _evaluate_level(oracle, value, 0, field_path, recorder)


def _walk_data(tree, document, recorder):
    data = document.get('data') if isinstance(document, dict) else None
    _walk(tree.root, data if isinstance(data, dict) else {}, 'data', recorder)


def validate(tree, status_code, body):
    """Evaluate format oracles, then schema oracles over the data member."""
    recorder = _Recorder()
    status_check, object_check, errors_check = tree.format_oracles

    if not recorder.add('status', status_check, status_code == 200, status_code):
        return recorder.report()

    try:
        document = json.loads(body)
    except ValueError:
        document = MISSING
    if not recorder.add('body', object_check, isinstance(document, dict), document):
        return recorder.report()

    errors = document.get('errors', MISSING)
    if not recorder.add('errors', errors_check, errors is MISSING, errors):
        return recorder.report()

    _walk_data(tree, document, recorder)
    return recorder.report()


def count_planned_assertions(tree, body):
    """Assertions ``validate`` would count on a fully passing response shaped like ``body``."""
    recorder = _Recorder()
    _walk_data(tree, body, recorder)
    return len(tree.format_oracles) + len(recorder.outcomes)
