"""
Faultlab: a mock GraphQL server answering with seeded, schema-conformant
data, into which schema faults can be injected.
"""

from .data import DataGenerator, Resolution, conformant_response
from .fixtures import FaultKind, FaultSpec, FaultTarget, Fixture, load_fault_spec

__all__ = [
    'DataGenerator', 'FaultKind', 'FaultSpec', 'FaultTarget', 'Fixture', 'Resolution',
    'conformant_response', 'load_fault_spec', 'serve',
]


def serve(fixture, host='127.0.0.1', port=0):
    """Serve ``fixture`` on a background thread; returns a ServerHandle."""
    from ..server import serve_app
    from .lab import FaultLab

    return serve_app('harvestlab.urls', FaultLab(fixture), host, port)
