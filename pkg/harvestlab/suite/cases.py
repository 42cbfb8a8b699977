"""Test cases materialized from harvested query records."""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from ..exceptions import HarvestLabError
from ..oracles import OracleTree, derive_oracles
from ..query import parse_query, reached_tuples
from ..recorder.store import format_timestamp
from ..schema.model import SchemaTuple

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Origin:
    """Traffic metadata of the record a case was generated from."""

    times_called: int
    created_at: str
    updated_at: str
    covered_tuples: Tuple[SchemaTuple, ...] = ()

    def to_dict(self):
        return {
            'times_called': self.times_called,
            'created_at': self.created_at,
            'updated_at': self.updated_at,
            'covered_tuples': [t.to_dict() for t in self.covered_tuples],
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            times_called=data['times_called'],
            created_at=data['created_at'],
            updated_at=data['updated_at'],
            covered_tuples=tuple(SchemaTuple.from_dict(t) for t in data.get('covered_tuples', ())),
        )


@dataclass(frozen=True)
class TestCase:
    __test__ = False

    id: str
    query: str
    variables: Dict[str, Any]
    operation_name: Optional[str]
    oracle: OracleTree
    origin: Origin

    def to_dict(self):
        return {
            'id': self.id,
            'query': self.query,
            'variables': self.variables,
            'operation_name': self.operation_name,
            'oracle': self.oracle.to_dict(),
            'origin': self.origin.to_dict(),
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            id=data['id'],
            query=data['query'],
            variables=data.get('variables') or {},
            operation_name=data.get('operation_name'),
            oracle=OracleTree.from_dict(data['oracle']),
            origin=Origin.from_dict(data['origin']),
        )

    def payload(self):
        return {'query': self.query, 'variables': self.variables, 'operationName': self.operation_name}


@dataclass
class GenerationReport:
    """Records the generator could not turn into cases."""

    mutations_skipped: int = 0
    stale: List[Dict[str, str]] = field(default_factory=list)

    def to_dict(self):
        return {'mutations_skipped': self.mutations_skipped, 'stale': self.stale}


def case_id(record):
    return f"{record.operation_name or 'anonymous'}-{record.key.short()}"


def generate(records, schema, report=None):
    """One TestCase per QUERY record, in record order.

    Mutation records and records that no longer fit the schema are left out;
    pass a GenerationReport to learn which.
    """
    report = report if report is not None else GenerationReport()
    cases = []
    for record in records:
        if record.excluded_from_generation:
            report.mutations_skipped += 1
            logger.info("Skipping mutation record %s", case_id(record))
            continue
        try:
            doc = parse_query(record.query, record.operation_name)
            oracle = derive_oracles(schema, doc)
            covered = reached_tuples(doc, schema)
        except HarvestLabError as exc:
            logger.warning("Skipping stale query %s: %s", case_id(record), exc)
            report.stale.append({
                'key': record.key.hex,
                'operation_name': record.operation_name,
                'error': type(exc).__name__,
                'message': str(exc),
            })
            continue
        cases.append(TestCase(
            id=case_id(record),
            query=record.query,
            variables=record.variables,
            operation_name=record.operation_name,
            oracle=oracle,
            origin=Origin(
                times_called=record.times_called,
                created_at=format_timestamp(record.created_at),
                updated_at=format_timestamp(record.updated_at),
                covered_tuples=tuple(sorted(covered, key=lambda t: (t.object_name, t.field_name))),
            ),
        ))
    return cases
