"""
Schema coverage of a query suite and set algebra between two suites.

Coverage is computed statically from the query documents: a tuple
``{Object, field}`` is covered when some document selects ``field`` on
static parent ``Object``.
"""

import logging
from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal
from fractions import Fraction
from typing import FrozenSet

from .query.ast import OperationKind
from .query.reach import reached_tuples
from .schema.model import SchemaTuple, tuple_universe

logger = logging.getLogger(__name__)


def format_percent(ratio):
    """Render a ratio as a percentage with one decimal, rounding half up."""
    value = Decimal(ratio.numerator) * 100 / Decimal(ratio.denominator)
    return f"{value.quantize(Decimal('0.1'), rounding=ROUND_HALF_UP)}%"


def tuples_to_json(tuples):
    return [t.to_dict() for t in sorted(tuples, key=lambda t: (t.object_name, t.field_name))]


def tuples_from_json(data):
    return frozenset(SchemaTuple.from_dict(item) for item in data)


def coverage_universe(schema, include_mutations=False):
    """The tuple universe coverage is measured against."""
    universe = tuple_universe(schema)
    if include_mutations or not schema.mutation_type_name:
        return universe
    return frozenset(t for t in universe if t.object_name != schema.mutation_type_name)


@dataclass(frozen=True)
class CoverageReport:
    schema_tuples: int
    covered_tuples: FrozenSet[SchemaTuple]
    entry_points_total: int
    entry_points_covered: int

    @property
    def schema_cov(self):
        if not self.schema_tuples:
            return Fraction(0)
        return Fraction(len(self.covered_tuples), self.schema_tuples)

    @property
    def schema_cov_percent(self):
        return format_percent(self.schema_cov)

    def to_dict(self):
        return {
            'schema_tuples': self.schema_tuples,
            'covered_tuples': len(self.covered_tuples),
            'schema_cov': self.schema_cov_percent,
            'entry_points_total': self.entry_points_total,
            'entry_points_covered': self.entry_points_covered,
            'tuples': tuples_to_json(self.covered_tuples),
        }


def coverage_of(docs, schema, include_mutations=False):
    """Union of reached tuples over ``docs`` against the schema universe.

    Mutation documents contribute nothing unless ``include_mutations`` is set.
    """
    universe = coverage_universe(schema, include_mutations)
    covered = set()
    for doc in docs:
        if doc.operation_kind is OperationKind.MUTATION and not include_mutations:
            continue
        covered |= reached_tuples(doc, schema)
    covered &= universe

    entry_types = {schema.query_type_name}
    if include_mutations and schema.mutation_type_name:
        entry_types.add(schema.mutation_type_name)
    entry_points = {t for t in universe if t.object_name in entry_types}
    return CoverageReport(
        schema_tuples=len(universe),
        covered_tuples=frozenset(covered),
        entry_points_total=len(entry_points),
        entry_points_covered=len(entry_points & covered),
    )


@dataclass(frozen=True)
class SuiteDiff:
    only_in_a: FrozenSet[SchemaTuple] = field(default_factory=frozenset)
    only_in_b: FrozenSet[SchemaTuple] = field(default_factory=frozenset)
    intersection: FrozenSet[SchemaTuple] = field(default_factory=frozenset)
    uncovered_by_both: FrozenSet[SchemaTuple] = field(default_factory=frozenset)

    @property
    def distinct_tuples(self):
        return len(self.only_in_b)

    def to_dict(self):
        return {
            'counts': {
                'only_in_a': len(self.only_in_a),
                'only_in_b': len(self.only_in_b),
                'intersection': len(self.intersection),
                'uncovered_by_both': len(self.uncovered_by_both),
            },
            'only_in_a': tuples_to_json(self.only_in_a),
            'only_in_b': tuples_to_json(self.only_in_b),
            'intersection': tuples_to_json(self.intersection),
            'uncovered_by_both': tuples_to_json(self.uncovered_by_both),
        }


def diff(a, b, universe):
    a, b, universe = frozenset(a), frozenset(b), frozenset(universe)
    outside = (a | b) - universe
    if outside:
        logger.warning("%d tuple(s) fall outside the schema universe", len(outside))
    return SuiteDiff(
        only_in_a=a - b,
        only_in_b=b - a,
        intersection=a & b,
        uncovered_by_both=universe - (a | b),
    )
