"""
Oracle engine: schema-derived expectations for a query and their evaluation
against a response.
"""

from .checks import FORMAT_CHECKS, MISSING, Check, CheckKind, leaf_check
from .derive import FieldOracle, OracleTree, derive_oracles
from .validate import Outcome, ValidationReport, Verdict, count_planned_assertions, summarize, validate

__all__ = [
    'FORMAT_CHECKS', 'MISSING', 'Check', 'CheckKind', 'FieldOracle', 'OracleTree', 'Outcome',
    'ValidationReport', 'Verdict', 'count_planned_assertions', 'derive_oracles', 'leaf_check',
    'summarize', 'validate',
]
