"""Replay of test cases against a GraphQL endpoint."""

import logging
import subprocess
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Tuple

import httpx

from ..oracles import Check, CheckKind, Outcome, ValidationReport, Verdict, validate

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CaseResult:
    case_id: str
    report: ValidationReport
    status_code: Optional[int] = None

    @property
    def passed(self):
        return self.report.passed

    def to_dict(self):
        return {'id': self.case_id, 'status_code': self.status_code, **self.report.to_dict()}

    @classmethod
    def from_dict(cls, data):
        return cls(data['id'], ValidationReport.from_dict(data), data.get('status_code'))


@dataclass(frozen=True)
class SuiteResult:
    results: Tuple[CaseResult, ...]
    wall_time: float = 0.0

    @property
    def totals(self):
        passing = sum(1 for result in self.results if result.passed)
        return {
            'tests': len(self.results),
            'passing': passing,
            'failing': len(self.results) - passing,
            'assertions_evaluated': sum(result.report.assertions_evaluated for result in self.results),
        }

    @property
    def passed(self):
        return self.totals['failing'] == 0

    def to_dict(self):
        return {
            'totals': self.totals,
            'wall_time': round(self.wall_time, 3),
            'cases': [result.to_dict() for result in self.results],
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            results=tuple(CaseResult.from_dict(case) for case in data.get('cases', ())),
            wall_time=data.get('wall_time', 0.0),
        )


def transport_failure(exc):
    outcome = Outcome('request', Check(CheckKind.TRANSPORT), Verdict.FAIL, f"{type(exc).__name__}: {exc}")
    return ValidationReport((outcome,))


def run_case(client, case, endpoint):
    try:
        response = client.post(endpoint, json=case.payload())
    except httpx.HTTPError as exc:
        logger.info("Case %s could not reach %s: %s", case.id, endpoint, exc)
        return CaseResult(case.id, transport_failure(exc))
    return CaseResult(case.id, validate(case.oracle, response.status_code, response.content), response.status_code)


def run(cases, endpoint, parallelism=4, timeout=10.0, headers=None, transport=None):
    """Execute every case and collect a SuiteResult ordered by case id."""
    if parallelism < 1:
        raise ValueError("parallelism must be a positive integer")
    started = time.monotonic()
    with httpx.Client(headers=headers, timeout=timeout, transport=transport) as client:
        with ThreadPoolExecutor(max_workers=parallelism) as executor:
            results = list(executor.map(lambda case: run_case(client, case, endpoint), cases))
    results.sort(key=lambda result: result.case_id)
    return SuiteResult(tuple(results), time.monotonic() - started)


def run_pre_hook(command):
    """Run a shell command before the suite, e.g. to reset a staging database."""
    logger.info("Running pre-hook: %s", command)
    subprocess.run(command, shell=True, check=True)
