"""Views for the recording proxy."""

import logging

import httpx
from django.http import HttpResponse
from django.views.decorators.http import require_http_methods

from .capture import CapturedRequest

logger = logging.getLogger(__name__)


def intercept(request, path=''):
    """Forward any request upstream; capture it when it targets the GraphQL path."""
    recorder = request.harvestlab
    recorder.metrics.increment('requests_total')
    body = request.body
    try:
        upstream = recorder.forward(request.method, request.get_full_path(), request.headers, body)
    except httpx.TransportError as e:
        logger.warning("Upstream unreachable for %s %s: %s", request.method, request.path, e)
        return HttpResponse(b'Bad Gateway', status=502, content_type='text/plain')

    response = HttpResponse(upstream.content, status=upstream.status_code)
    del response['Content-Type']
    merged = {}
    for name, value in upstream.headers:
        key = name.lower()
        if key == 'set-cookie':
            # Django only emits repeated Set-Cookie lines from response.cookies
            response.cookies.load(value)
        elif key in merged:
            merged[key] = (merged[key][0], f"{merged[key][1]}, {value}")
        else:
            merged[key] = (name, value)
    for name, value in merged.values():
        response.headers[name] = value

    if recorder.is_graphql_path(request.path):
        recorder.capture(CapturedRequest(request.method, body, request.GET.dict()))
    return response


@require_http_methods(["GET"])
def metrics(request):
    """Plain-text counters."""
    counters = request.harvestlab.metrics_snapshot()
    text = ''.join(f"{name} {value}\n" for name, value in counters.items())
    return HttpResponse(text, content_type='text/plain; version=0.0.4')
