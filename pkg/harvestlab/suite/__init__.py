"""
Suite: test cases generated from harvested queries, their manifest and the
runner that replays them.
"""

from .cases import GenerationReport, Origin, TestCase, case_id, generate
from .manifest import export_manifest, import_manifest
from .runner import CaseResult, SuiteResult, run, run_pre_hook

__all__ = [
    'CaseResult', 'GenerationReport', 'Origin', 'SuiteResult', 'TestCase', 'case_id',
    'export_manifest', 'generate', 'import_manifest', 'run', 'run_pre_hook',
]
