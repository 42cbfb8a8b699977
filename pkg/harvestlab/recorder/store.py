"""
Persistent store of harvested queries.

A store directory holds one generation of files at a time: an optional
compacted ``snapshot-<n>.jsonl`` (one QueryRecord per line) and the
``journal-<n>.jsonl`` of events recorded since that snapshot. The store
state is the snapshot folded with its journal.
"""

import json
import logging
import os
import re
import threading
from dataclasses import dataclass, replace
from datetime import datetime
from datetime import timezone as dt_timezone
from pathlib import Path
from typing import Any, Dict, Optional

from django.utils import timezone
from django.utils.dateparse import parse_datetime

from ..exceptions import StorageError
from ..query.ast import OperationKind
from ..query.canonical import CanonicalKey

logger = logging.getLogger(__name__)

TIMESTAMP_FORMAT = '%Y-%m-%d %H:%M:%S'
GENERATION_FILE = re.compile(r'^(snapshot|journal)-(\d+)\.jsonl(\.tmp)?$')


def format_timestamp(moment):
    return moment.astimezone(dt_timezone.utc).strftime(TIMESTAMP_FORMAT)


def parse_timestamp(text):
    parsed = parse_datetime(text) if isinstance(text, str) else None
    if parsed is None:
        raise ValueError(f"Not a timestamp: {text!r}")
    if timezone.is_naive(parsed):
        parsed = timezone.make_aware(parsed, dt_timezone.utc)
    return parsed


def current_time():
    return timezone.now().replace(microsecond=0)


@dataclass(frozen=True)
class QueryRecord:
    key: CanonicalKey
    query: str
    variables: Dict[str, Any]
    operation_name: Optional[str]
    created_at: datetime
    updated_at: datetime
    times_called: int
    operation_kind: OperationKind = OperationKind.QUERY

    @property
    def excluded_from_generation(self):
        return self.operation_kind is OperationKind.MUTATION

    def to_dict(self):
        return {
            'query': self.query,
            'variables': self.variables,
            'operation_name': self.operation_name,
            'created_at': format_timestamp(self.created_at),
            'updated_at': format_timestamp(self.updated_at),
            'times_called': self.times_called,
            'key': self.key.hex,
            'operation_kind': self.operation_kind.value,
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            key=CanonicalKey.from_hex(data['key']),
            query=data['query'],
            variables=data.get('variables') or {},
            operation_name=data.get('operation_name'),
            created_at=parse_timestamp(data['created_at']),
            updated_at=parse_timestamp(data['updated_at']),
            times_called=int(data['times_called']),
            operation_kind=OperationKind(data.get('operation_kind', OperationKind.QUERY.value)),
        )


@dataclass(frozen=True)
class FilterSpec:
    min_times_called: Optional[int] = None
    since: Optional[datetime] = None
    until: Optional[datetime] = None
    operation_kind: Optional[OperationKind] = None
    limit: Optional[int] = None

    def matches(self, record):
        if self.min_times_called is not None and record.times_called < self.min_times_called:
            return False
        if self.since is not None and record.updated_at < self.since:
            return False
        if self.until is not None and record.updated_at > self.until:
            return False
        if self.operation_kind is not None and record.operation_kind is not self.operation_kind:
            return False
        return True


def export_order(record):
    return (-record.times_called, record.created_at, record.key.hex)


class QueryStore:
    """Keyed collection of QueryRecords backed by a JSON-Lines journal.

    All mutations go through ``record``; a lock serializes writers so the
    journal has a single writer even when shared between threads.
    """

    def __init__(self, directory, compact_every=1000, fsync=False, readonly=False):
        self.directory = Path(directory)
        self.compact_every = compact_every
        self.fsync = fsync
        self.readonly = readonly
        self._lock = threading.Lock()
        self._records = {}
        self._generation = 0
        self._pending = 0
        self._journal = None
        if not readonly:
            self.directory.mkdir(parents=True, exist_ok=True)
        self._load()
        if not readonly:
            self._journal = self._journal_path(self._generation).open('a', encoding='utf-8')

    def _snapshot_path(self, generation):
        return self.directory / f"snapshot-{generation}.jsonl"

    def _journal_path(self, generation):
        return self.directory / f"journal-{generation}.jsonl"

    def _generation_files(self):
        if not self.directory.is_dir():
            return []
        files = []
        for path in self.directory.iterdir():
            match = GENERATION_FILE.match(path.name)
            if match:
                files.append((path, match.group(1), int(match.group(2)), bool(match.group(3))))
        return files

    def _load(self):
        files = self._generation_files()
        snapshots = [generation for _path, kind, generation, tmp in files if kind == 'snapshot' and not tmp]
        self._generation = max(snapshots, default=0)

        snapshot = self._snapshot_path(self._generation)
        if snapshot.exists():
            for line in snapshot.read_text(encoding='utf-8').splitlines():
                if line.strip():
                    record = QueryRecord.from_dict(json.loads(line))
                    self._records[record.key] = record

        events = self._read_journal(self._journal_path(self._generation))
        for event in events:
            self._apply(event)
        self._pending = len(events)
        logger.info(
            "Loaded %d record(s) from %s (generation %d, %d journal event(s))",
            len(self._records), self.directory, self._generation, len(events),
        )

        if not self.readonly:
            for path, _kind, generation, tmp in files:
                if tmp or generation != self._generation:
                    path.unlink()

    def _read_journal(self, path):
        """Events of a journal; a torn trailing line is dropped (and truncated when writable)."""
        if not path.exists():
            return []
        data = path.read_bytes()
        events = []
        offset = 0
        for line in data.splitlines(keepends=True):
            if not line.endswith(b'\n'):
                break
            stripped = line.strip()
            if stripped:
                try:
                    events.append(json.loads(stripped))
                except ValueError:
                    break
            offset += len(line)
        if offset < len(data):
            logger.warning("Discarding %d unreadable byte(s) at the end of %s", len(data) - offset, path)
            if not self.readonly:
                with path.open('rb+') as journal_file:
                    journal_file.truncate(offset)
        return events

    def _apply(self, event):
        key = CanonicalKey.from_hex(event['key'])
        moment = parse_timestamp(event['ts'])
        existing = self._records.get(key)
        if existing is None:
            record = QueryRecord(
                key=key,
                query=event['query'],
                variables=event.get('variables') or {},
                operation_name=event.get('operation_name'),
                created_at=moment,
                updated_at=moment,
                times_called=1,
                operation_kind=OperationKind(event.get('operation_kind', OperationKind.QUERY.value)),
            )
        else:
            record = replace(
                existing,
                times_called=existing.times_called + 1,
                updated_at=max(existing.updated_at, moment),
            )
        self._records[key] = record
        return record

    def record(self, key, query, variables=None, operation_name=None, now=None,
               operation_kind=OperationKind.QUERY):
        """Count one occurrence of ``key``, inserting it on first sight."""
        moment = (now or current_time()).replace(microsecond=0)
        event = {
            'key': key.hex,
            'query': query,
            'variables': variables or {},
            'operation_name': operation_name,
            'operation_kind': operation_kind.value,
            'ts': format_timestamp(moment),
        }
        line = json.dumps(event, sort_keys=True) + '\n'
        with self._lock:
            if self._journal is None:
                raise StorageError(f"Query store {self.directory} is not open for writing")
            offset = None
            try:
                offset = os.fstat(self._journal.fileno()).st_size
                self._journal.write(line)
                self._journal.flush()
                if self.fsync:
                    os.fsync(self._journal.fileno())
            except OSError as exc:
                logger.error("Could not append to the journal in %s: %s", self.directory, exc)
                if offset is not None:
                    self._rewind(offset)
                raise StorageError(f"Journal write failed: {exc}") from exc
            record = self._apply(event)
            self._pending += 1
            if self._pending >= self.compact_every:
                self._compact()
        return record

    def _rewind(self, offset):
        """Cut a partially written line off the journal so later appends start on a line boundary."""
        path = self._journal_path(self._generation)
        try:
            self._journal.close()
        except OSError:
            pass
        try:
            with path.open('rb+') as journal_file:
                journal_file.truncate(offset)
            self._journal = path.open('a', encoding='utf-8')
        except OSError as exc:
            logger.error("Could not repair %s, the store is now read-only: %s", path, exc)
            self._journal = None

    def _compact(self):
        target = self._generation + 1
        snapshot = self._snapshot_path(target)
        tmp = snapshot.with_name(snapshot.name + '.tmp')
        records = sorted(self._records.values(), key=lambda record: record.key.hex)
        try:
            with tmp.open('w', encoding='utf-8') as snapshot_file:
                for record in records:
                    snapshot_file.write(json.dumps(record.to_dict(), sort_keys=True) + '\n')
                snapshot_file.flush()
                if self.fsync:
                    os.fsync(snapshot_file.fileno())
            os.replace(tmp, snapshot)
            journal = self._journal_path(target).open('a', encoding='utf-8')
        except OSError as exc:
            logger.error("Compaction of %s failed: %s", self.directory, exc)
            return False

        previous = self._journal
        self._journal = journal
        previous.close()
        self._snapshot_path(self._generation).unlink(missing_ok=True)
        self._journal_path(self._generation).unlink(missing_ok=True)
        self._generation = target
        self._pending = 0
        logger.info("Compacted %d record(s) into generation %d", len(records), target)
        return True

    def compact(self):
        with self._lock:
            if self._journal is None:
                raise StorageError(f"Query store {self.directory} is not open for writing")
            return self._compact()

    def close(self):
        with self._lock:
            if self._journal is None:
                return
            if self._pending:
                self._compact()
            self._journal.close()
            self._journal = None

    def __enter__(self):
        return self

    def __exit__(self, *exc_info):
        self.close()

    def __len__(self):
        with self._lock:
            return len(self._records)

    def get(self, key):
        with self._lock:
            return self._records.get(key)

    def records(self):
        """A consistent copy of every record."""
        with self._lock:
            return list(self._records.values())

    def export(self, filter_spec=None):
        """Records matching ``filter_spec``, most called first."""
        filter_spec = filter_spec or FilterSpec()
        selected = sorted(
            (record for record in self.records() if filter_spec.matches(record)), key=export_order
        )
        if filter_spec.limit is not None:
            selected = selected[:filter_spec.limit]
        return selected
