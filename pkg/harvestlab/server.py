"""In-process serving of a urlconf with a per-server context object."""

import logging
import threading
from dataclasses import dataclass

from django.core.handlers.wsgi import WSGIHandler
from django.core.servers.basehttp import ThreadedWSGIServer, WSGIRequestHandler

logger = logging.getLogger(__name__)


class URLConfHandler(WSGIHandler):
    """A WSGI handler bound to one urlconf.

    ``context`` is attached to every request as ``request.harvestlab`` so the
    recorder proxy and the faultlab server can share one Django project.
    """

    def __init__(self, urlconf, context=None):
        super().__init__()
        self.urlconf = urlconf
        self.context = context

    def get_response(self, request):
        request.urlconf = self.urlconf
        request.harvestlab = self.context
        return super().get_response(request)


@dataclass
class ServerHandle:
    httpd: ThreadedWSGIServer
    thread: threading.Thread

    @property
    def address(self):
        host, port = self.httpd.server_address[:2]
        return host, port

    @property
    def url(self):
        host, port = self.address
        return f"http://{host}:{port}"

    def wait(self):
        self.thread.join()

    def shutdown(self):
        self.httpd.shutdown()
        self.httpd.server_close()
        self.thread.join()


def parse_listen(listen, default_port=8000):
    """Split ``host:port`` (or a bare port) into its parts."""
    host, _, port = str(listen).rpartition(':')
    return host or '127.0.0.1', int(port or default_port)


def serve_app(urlconf, context, host='127.0.0.1', port=0):
    """Start a threaded server for ``urlconf`` and return its handle."""
    httpd = ThreadedWSGIServer((host, port), WSGIRequestHandler, allow_reuse_address=True)
    httpd.daemon_threads = True
    httpd.set_app(URLConfHandler(urlconf, context))
    thread = threading.Thread(target=httpd.serve_forever, name=f"harvestlab-{urlconf}", daemon=True)
    thread.start()
    handle = ServerHandle(httpd, thread)
    logger.info("Serving %s on %s", urlconf, handle.url)
    return handle
