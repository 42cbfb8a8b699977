"""Serve a fixture schema with injectable faults."""

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from ...exceptions import HarvestLabError
from ...faultlab import Fixture, serve
from ...server import parse_listen
from ..artifacts import IO_ERROR


class Command(BaseCommand):
    help = "Run the faultlab mock GraphQL server."

    def add_arguments(self, parser):
        config = settings.HARVESTLAB
        parser.add_argument('--schema', default=config['FAULTLAB_SCHEMA'])
        parser.add_argument('--seed', type=int, default=config['FAULTLAB_SEED'])
        parser.add_argument(
            '--fault', action='append', dest='faults', default=None,
            help="fault spec JSON file; repeat to enable several",
        )
        parser.add_argument('--listen', default='127.0.0.1:8000')

    def handle(self, *args, **options):
        faults = options['faults'] if options['faults'] is not None else settings.HARVESTLAB['FAULTLAB_FAULTS']
        try:
            fixture = Fixture.load(options['schema'], options['seed'], faults)
        except (HarvestLabError, OSError) as e:
            raise CommandError(f"Cannot load the fixture: {e}", returncode=IO_ERROR)

        host, port = parse_listen(options['listen'])
        try:
            handle = serve(fixture, host, port)
        except OSError as e:
            raise CommandError(f"Cannot listen on {options['listen']}: {e}", returncode=IO_ERROR)
        self.stdout.write(
            f"faultlab serving {options['schema']} (seed {fixture.seed}, "
            f"{len(fixture.faults)} fault(s)) on {handle.url}/graphql/"
        )
        try:
            handle.wait()
        except KeyboardInterrupt:
            pass
        finally:
            handle.shutdown()
