"""
Recorder: a reverse proxy that logs each unique GraphQL request into a
persistent query store.
"""

from .capture import CapturedRequest, Metrics, Recorder, extract_operations
from .store import FilterSpec, QueryRecord, QueryStore, format_timestamp, parse_timestamp

__all__ = [
    'CapturedRequest', 'FilterSpec', 'Metrics', 'QueryRecord', 'QueryStore', 'Recorder',
    'extract_operations', 'format_timestamp', 'parse_timestamp', 'serve',
]


def serve(recorder, host='127.0.0.1', port=0):
    """Run the proxy for ``recorder`` on a background thread; returns a ServerHandle."""
    from ..server import serve_app

    return serve_app('harvestlab.recorder.urls', recorder, host, port)
