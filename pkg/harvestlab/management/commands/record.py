"""Run the recording proxy."""

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from ...recorder import QueryStore, Recorder, serve
from ...server import parse_listen
from ..artifacts import IO_ERROR


class Command(BaseCommand):
    help = "Proxy GraphQL traffic to an upstream endpoint and record every unique query."

    def add_arguments(self, parser):
        config = settings.HARVESTLAB
        parser.add_argument('--listen', default='127.0.0.1:8080', help="host:port to accept traffic on")
        parser.add_argument('--upstream', default=config['UPSTREAM'], help="URL of the real GraphQL server")
        parser.add_argument('--path', default=config['GRAPHQL_PATH'], help="GraphQL endpoint path")
        parser.add_argument('--store', default=config['STORE_DIR'], help="query store directory")

    def handle(self, *args, **options):
        config = settings.HARVESTLAB
        if not options['upstream']:
            raise CommandError("No upstream configured; pass --upstream <url>.", returncode=IO_ERROR)
        store = QueryStore(options['store'], compact_every=config['COMPACT_EVERY'], fsync=config['FSYNC'])
        recorder = Recorder(
            store, options['upstream'], options['path'], timeout=config['UPSTREAM_TIMEOUT'],
        )
        host, port = parse_listen(options['listen'], default_port=8080)
        try:
            handle = serve(recorder, host, port)
        except OSError as e:
            recorder.close()
            raise CommandError(f"Cannot listen on {options['listen']}: {e}", returncode=IO_ERROR)

        self.stdout.write(f"Recording {options['path']} traffic to {options['upstream']} on {handle.url}")
        try:
            handle.wait()
        except KeyboardInterrupt:
            pass
        finally:
            handle.shutdown()
            recorder.flush()
            counters = recorder.metrics_snapshot()
            recorder.close()
        for name, value in counters.items():
            self.stdout.write(f"{name} {value}")
