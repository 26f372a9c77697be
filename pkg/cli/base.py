"""
Shared plumbing for the kodaira management commands: JSON document loading,
--json output and the exit-code convention.
"""
import json
import logging

from django.core.management.base import BaseCommand, CommandError

from app.documents import dump_document, flatten_errors
from app.exceptions import KodairaKitError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FALSE_VERDICT = 1
EXIT_INPUT_ERROR = 2


class InputError(CommandError):
    """Malformed or inconsistent input; exits with status 2."""

    def __init__(self, message):
        super().__init__(message, returncode=EXIT_INPUT_ERROR)


class FalseVerdict(CommandError):
    """The report was written and its verdict is negative; exits with status 1."""

    def __init__(self, message):
        super().__init__(message, returncode=EXIT_FALSE_VERDICT)


class KitCommand(BaseCommand):
    requires_system_checks = []

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super().create_parser(prog_name, subcommand, **kwargs)
        parser.add_argument(
            '--json',
            action='store_true',
            dest='as_json',
            help='Write a JSON document instead of text'
        )
        return parser

    def execute(self, *args, **options):
        try:
            return super().execute(*args, **options)
        except KodairaKitError as exc:
            logger.warning(f"{type(exc).__name__}: {exc}")
            raise InputError(f"{type(exc).__name__}: {exc}")

    def load_document(self, path, serializer_class, label=''):
        """Read a JSON file and build its object through `serializer_class`."""
        where = label or 'document'
        try:
            with open(path, encoding='utf-8') as fh:
                data = json.load(fh)
        except OSError as exc:
            raise InputError(f"{where}: cannot read {path}: {exc.strerror}")
        except json.JSONDecodeError as exc:
            raise InputError(f"{where}: invalid JSON in {path} (line {exc.lineno}): {exc.msg}")

        serializer = serializer_class(data=data)
        if not serializer.is_valid():
            raise InputError('\n'.join(flatten_errors(serializer.errors, label)))
        return serializer.save()

    def emit(self, options, payload, lines=()):
        """JSON document on --json, otherwise the text lines."""
        if options.get('as_json'):
            self.stdout.write(dump_document(payload))
            return
        for line in lines:
            self.stdout.write(line)

    def verdict(self, holds, message):
        if not holds:
            raise FalseVerdict(message)

    def load_configuration(self, path, label='config'):
        """A curve configuration document that also passes validate()."""
        from curves.api.serializers import CurveConfigurationSerializer
        from curves.configuration import validate

        cfg = self.load_document(path, CurveConfigurationSerializer, label)
        violations = validate(cfg)
        if violations:
            raise InputError('\n'.join(f"{label}: {v.kind}: {v.detail}" for v in violations))
        return cfg
