"""
Upstream forwarding and the single writer that turns captured GraphQL
requests into store events.
"""

import json
import logging
import queue
import threading
from dataclasses import dataclass, field
from typing import Dict

import httpx

from ..exceptions import HarvestLabError, StorageError
from ..query import canonicalize, parse_query

logger = logging.getLogger(__name__)

HOP_BY_HOP_HEADERS = frozenset({
    'connection', 'keep-alive', 'proxy-authenticate', 'proxy-authorization',
    'te', 'trailer', 'trailers', 'transfer-encoding', 'upgrade',
})
# recomputed on each side of the proxy
FRAMING_HEADERS = frozenset({'host', 'content-length'})

METRIC_NAMES = (
    'requests_total',
    'graphql_requests_total',
    'parse_failures_total',
    'storage_errors_total',
    'journal_events_total',
)


def forwardable(headers):
    return {
        name: value for name, value in headers.items()
        if name.lower() not in HOP_BY_HOP_HEADERS and name.lower() not in FRAMING_HEADERS
    }


@dataclass(frozen=True)
class CapturedRequest:
    method: str
    body: bytes = b''
    params: Dict[str, str] = field(default_factory=dict)


@dataclass(frozen=True)
class UpstreamResponse:
    status_code: int
    headers: tuple
    content: bytes


class Metrics:
    def __init__(self):
        self._lock = threading.Lock()
        self._counters = dict.fromkeys(METRIC_NAMES, 0)

    def increment(self, name, amount=1):
        with self._lock:
            self._counters[name] += amount

    def snapshot(self):
        with self._lock:
            return dict(self._counters)

    def __getitem__(self, name):
        with self._lock:
            return self._counters[name]


def extract_operations(captured):
    """``(query, variables, operation_name)`` triples carried by a request.

    Returns an empty list for requests that are not GraphQL; raises
    ValueError for GraphQL requests whose payload cannot be decoded.
    """
    if captured.method == 'GET':
        if 'query' not in captured.params:
            return []
        variables = captured.params.get('variables')
        return [_operation({
            'query': captured.params['query'],
            'variables': json.loads(variables) if variables else None,
            'operationName': captured.params.get('operationName'),
        })]
    payload = json.loads(captured.body)
    items = payload if isinstance(payload, list) else [payload]
    return [
        _operation(item) for item in items
        if isinstance(item, dict) and isinstance(item.get('query'), str)
    ]


def _operation(item):
    variables = item.get('variables') or {}
    if not isinstance(variables, dict):
        raise ValueError("GraphQL variables must be a JSON object")
    return item['query'], variables, item.get('operationName')


class Recorder:
    """Forwards traffic upstream and records GraphQL requests off the request path.

    Captured requests go through a queue to exactly one writer thread, which
    parses, canonicalizes and records them.
    """

    def __init__(self, store, upstream, graphql_path='/graphql/', timeout=30.0, transport=None):
        self.store = store
        self.graphql_path = graphql_path
        self.metrics = Metrics()
        self.client = httpx.Client(base_url=upstream, timeout=timeout, transport=transport)
        self._queue = queue.Queue()
        self._writer = threading.Thread(target=self._drain, name='harvestlab-writer', daemon=True)
        self._writer.start()

    def is_graphql_path(self, path):
        return path.rstrip('/') == self.graphql_path.rstrip('/')

    def forward(self, method, path, headers, body):
        """Send a request upstream and return its raw, undecoded response."""
        request = self.client.build_request(method, path, headers=forwardable(headers), content=body)
        response = self.client.send(request, stream=True)
        try:
            try:
                content = b''.join(response.iter_raw())
            except httpx.StreamConsumed:
                # transports that hand back an already read response still hold the raw bytes
                content = b''.join(response.stream)
        finally:
            response.close()
        headers = tuple(
            (name, value) for name, value in response.headers.multi_items()
            if name.lower() not in HOP_BY_HOP_HEADERS and name.lower() not in FRAMING_HEADERS
        )
        return UpstreamResponse(response.status_code, headers, content)

    def capture(self, captured):
        self._queue.put(captured)

    def flush(self):
        """Block until every captured request has been recorded."""
        self._queue.join()

    def close(self):
        self._queue.put(None)
        self._writer.join()
        self.client.close()
        self.store.close()

    def metrics_snapshot(self):
        counters = self.metrics.snapshot()
        counters['unique_queries'] = len(self.store)
        return counters

    def _drain(self):
        while True:
            captured = self._queue.get()
            try:
                if captured is None:
                    return
                self._process(captured)
            except Exception:
                logger.exception("Unexpected failure while recording a request")
            finally:
                self._queue.task_done()

    def _process(self, captured):
        try:
            operations = extract_operations(captured)
        except ValueError as exc:
            self.metrics.increment('graphql_requests_total')
            self.metrics.increment('parse_failures_total')
            logger.info("Undecodable GraphQL payload: %s", exc)
            return
        for query, variables, operation_name in operations:
            self.metrics.increment('graphql_requests_total')
            try:
                doc = parse_query(query, operation_name)
            except HarvestLabError as exc:
                self.metrics.increment('parse_failures_total')
                logger.info("Unparseable GraphQL request: %s", exc)
                continue
            try:
                self.store.record(
                    canonicalize(doc, variables), query, variables,
                    operation_name=doc.operation_name, operation_kind=doc.operation_kind,
                )
            except StorageError:
                self.metrics.increment('storage_errors_total')
                continue
            self.metrics.increment('journal_events_total')
