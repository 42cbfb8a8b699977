"""Pipeline run summary and failure grouping."""

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Tuple

from django.template.loader import render_to_string

from .coverage import coverage_universe, format_percent
from .oracles import Verdict
from .query.ast import OperationKind

INDEX = re.compile(r'\[\d+\]')


@dataclass(frozen=True)
class FailureGroup:
    """Failing outcomes sharing an entry point, a wildcarded path and a check kind."""

    entry_point: str
    path: str
    check: str
    field: str = ''
    cases: Tuple[str, ...] = ()
    failures: int = 0

    def to_dict(self):
        return {
            'entry_point': self.entry_point,
            'path': self.path,
            'check': self.check,
            'field': self.field,
            'cases': list(self.cases),
            'failures': self.failures,
        }


@dataclass(frozen=True)
class RunSummary:
    types: int = 0
    entry_points: int = 0
    unique_queries: int = 0
    assertions_evaluated: int = 0
    passing: int = 0
    failing: int = 0
    schema_tuples: int = 0
    covered_tuples: int = 0
    schema_cov: str = '0.0%'
    failure_groups: List[FailureGroup] = field(default_factory=list)

    def rows(self):
        return [
            ('TYPES', self.types),
            ('ENTRY_POINTS', self.entry_points),
            ('UNIQUE_QUERIES', self.unique_queries),
            ('ASSERTIONS_EVALUATED', self.assertions_evaluated),
            ('PASSING', self.passing),
            ('FAILING', self.failing),
            ('SCHEMA_TUPLES', self.schema_tuples),
            ('COVERED_TUPLES', self.covered_tuples),
            ('SCHEMA_COV', self.schema_cov),
        ]

    def to_dict(self):
        data = {label: value for label, value in self.rows()}
        data['FAILURE_GROUPS'] = [group.to_dict() for group in self.failure_groups]
        return data

    def render_text(self):
        rows = self.rows()
        return render_to_string('harvestlab/summary.txt', {
            'rows': rows,
            'label_width': max(len(label) for label, _value in rows),
            'groups': self.failure_groups,
        })


def _entry_point(path, roots):
    """The entry point a failing outcome belongs to."""
    if path.startswith('data.'):
        key = INDEX.sub('', path.split('.')[1])
        return roots.get(key, key)
    return '+'.join(sorted(set(roots.values()))) or '*'


def group_failures(suite_result, cases):
    roots = {case.id: {oracle.response_key: oracle.field_name for oracle in case.oracle.root} for case in cases}
    groups = {}
    for result in suite_result.results:
        for outcome in result.report.outcomes:
            if outcome.verdict is not Verdict.FAIL:
                continue
            key = (
                _entry_point(outcome.path, roots.get(result.case_id, {})),
                INDEX.sub('[*]', outcome.path),
                outcome.check.kind.value,
            )
            slot = groups.setdefault(key, {'field': outcome.field or '', 'cases': set(), 'failures': 0})
            slot['cases'].add(result.case_id)
            slot['failures'] += 1
    return [
        FailureGroup(entry_point, path, check, slot['field'], tuple(sorted(slot['cases'])), slot['failures'])
        for (entry_point, path, check), slot in sorted(groups.items())
    ]


def build_summary(records, cases, suite_result, schema, include_mutations=False):
    """Assemble the metric table for one pipeline run."""
    universe = coverage_universe(schema, include_mutations)
    covered = set()
    for case in cases:
        covered.update(case.origin.covered_tuples)
    covered &= universe
    totals = suite_result.totals if suite_result is not None else {}
    schema_tuples = len(universe)
    return RunSummary(
        types=len(schema.types),
        entry_points=len(schema.query_type.fields),
        unique_queries=sum(1 for record in records if record.operation_kind is OperationKind.QUERY),
        assertions_evaluated=totals.get('assertions_evaluated', 0),
        passing=totals.get('passing', 0),
        failing=totals.get('failing', 0),
        schema_tuples=schema_tuples,
        covered_tuples=len(covered),
        schema_cov=format_percent(Fraction(len(covered), schema_tuples) if schema_tuples else Fraction(0)),
        failure_groups=group_failures(suite_result, cases) if suite_result is not None else [],
    )
