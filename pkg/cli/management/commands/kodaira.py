import sys

from django.core.management.base import BaseCommand

from cli.runner import SUBCOMMANDS, run


class Command(BaseCommand):
    help = 'Run a kodaira-kit subcommand: ' + ', '.join(SUBCOMMANDS)
    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument('argv', nargs='...', help='Subcommand and its options')

    def handle(self, *args, **options):
        code = run(options['argv'], stdout=self.stdout, stderr=self.stderr)
        if code:
            sys.exit(code)
