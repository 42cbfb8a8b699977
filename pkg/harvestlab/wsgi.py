"""
WSGI config for the harvestlab faultlab server.
"""

import os
from django.core.wsgi import get_wsgi_application

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'harvestlab.settings')
application = get_wsgi_application()
