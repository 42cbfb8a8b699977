"""
Django settings for the harvestlab project.
"""

from pathlib import Path
import os

BASE_DIR = Path(__file__).resolve().parent.parent

SECRET_KEY = os.environ.get('HARVESTLAB_SECRET_KEY', 'harvestlab-local-key')

DEBUG = os.environ.get('DEBUG', 'False').lower() in ('true', '1', 'yes')

# The proxy answers for whatever Host the client addressed
ALLOWED_HOSTS = os.environ.get('ALLOWED_HOSTS', '*').split(',')

INSTALLED_APPS = [
    'harvestlab',
]

# Responses leave the process exactly as the views build them
MIDDLEWARE = []

ROOT_URLCONF = 'harvestlab.urls'

TEMPLATES = [
    {
        'BACKEND': 'django.template.backends.django.DjangoTemplates',
        'DIRS': [],
        'APP_DIRS': True,
        'OPTIONS': {
            'autoescape': False,
        },
    },
]

WSGI_APPLICATION = 'harvestlab.wsgi.application'

DATABASES = {}

DATA_UPLOAD_MAX_MEMORY_SIZE = None

LANGUAGE_CODE = 'en-us'
TIME_ZONE = 'UTC'
USE_I18N = False
USE_TZ = True


def _env_flag(name, default='False'):
    return os.environ.get(name, default).lower() in ('true', '1', 'yes')


HARVESTLAB = {
    'GRAPHQL_PATH': os.environ.get('HARVESTLAB_GRAPHQL_PATH', '/graphql/'),
    'STORE_DIR': os.environ.get('HARVESTLAB_STORE_DIR', str(BASE_DIR / 'querystore')),
    'UPSTREAM': os.environ.get('HARVESTLAB_UPSTREAM', ''),
    'UPSTREAM_TIMEOUT': float(os.environ.get('HARVESTLAB_UPSTREAM_TIMEOUT', '30')),
    'COMPACT_EVERY': int(os.environ.get('HARVESTLAB_COMPACT_EVERY', '1000')),
    'FSYNC': _env_flag('HARVESTLAB_FSYNC'),
    'RUN_PARALLELISM': int(os.environ.get('HARVESTLAB_RUN_PARALLELISM', '4')),
    'RUN_TIMEOUT': float(os.environ.get('HARVESTLAB_RUN_TIMEOUT', '10')),
    'FAULTLAB_SCHEMA': os.environ.get(
        'HARVESTLAB_FAULTLAB_SCHEMA',
        str(BASE_DIR / 'harvestlab' / 'faultlab' / 'schemas' / 'teasers.graphql'),
    ),
    'FAULTLAB_SEED': int(os.environ.get('HARVESTLAB_FAULTLAB_SEED', '0')),
    'FAULTLAB_FAULTS': [
        path for path in os.environ.get('HARVESTLAB_FAULTLAB_FAULTS', '').split(',') if path
    ],
}

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '%(asctime)s %(levelname)s %(name)s: %(message)s',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'plain',
        },
    },
    'loggers': {
        'harvestlab': {
            'handlers': ['console'],
            'level': os.environ.get('HARVESTLAB_LOG_LEVEL', 'INFO'),
            'propagate': False,
        },
        'django.server': {
            'handlers': ['console'],
            'level': os.environ.get('HARVESTLAB_REQUEST_LOG_LEVEL', 'WARNING'),
            'propagate': False,
        },
    },
}
