"""Views for the faultlab mock GraphQL server."""

import json

from django.http import JsonResponse
from django.views.decorators.http import require_http_methods

from ..exceptions import HarvestLabError
from .faults import get_all_faults
from .lab import lab_for

INVALID_JSON_ERROR = 'Invalid JSON'


def _graphql_error(message, status=400):
    return JsonResponse({'errors': [{'message': message}]}, status=status)


def _payload(request):
    if request.method == 'POST':
        return json.loads(request.body)
    variables = request.GET.get('variables')
    return {
        'query': request.GET.get('query'),
        'variables': json.loads(variables) if variables else None,
        'operationName': request.GET.get('operationName'),
    }


@require_http_methods(["GET", "POST"])
def graphql_endpoint(request):
    """Answer a GraphQL request with synthetic, possibly faulty, data."""
    try:
        payload = _payload(request)
        if not isinstance(payload, dict):
            return _graphql_error('Request body must be a JSON object')
        variables = payload.get('variables') or {}
        if not isinstance(variables, dict):
            return _graphql_error('Variables must be a JSON object')
        status, body = lab_for(request).execute(
            payload.get('query'), variables, payload.get('operationName')
        )
    except json.JSONDecodeError:
        return _graphql_error(INVALID_JSON_ERROR)
    except HarvestLabError as e:
        return _graphql_error(str(e))
    return JsonResponse(body, status=status)


@require_http_methods(["GET"])
def list_faults(request):
    """Return the available fault kinds and the faults enabled on this fixture."""
    lab = lab_for(request)
    return JsonResponse({
        'kinds': get_all_faults(),
        'enabled': [spec.to_dict() for spec in lab.fixture.faults],
    })


@require_http_methods(["GET"])
def health_check(request):
    """Health check endpoint for deployment verification."""
    fixture = lab_for(request).fixture
    return JsonResponse({
        'status': 'ok',
        'types': len(fixture.schema.types),
        'seed': fixture.seed,
        'faults': sorted(fixture.enabled_faults),
    })
