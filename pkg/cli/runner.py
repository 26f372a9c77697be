"""
`kodaira <subcommand> [options]`: one front door over the management commands.

Exit codes: 0 success or a true verdict, 1 a false verdict, 2 malformed input.
"""
import logging
import os
import sys
from typing import List, Optional, TextIO

from django.core.management import get_commands, load_command_class
from django.core.management.base import CommandError

from cli.base import EXIT_INPUT_ERROR, EXIT_OK

logger = logging.getLogger(__name__)

SUBCOMMANDS = {
    'check-p': 'check_p',
    'blow-up': 'blow_up',
    'blow-down': 'blow_down',
    'enumerate-fibers': 'enumerate_fibers',
    'discriminant': 'discriminant',
    'verify-riero': 'verify_riero',
    'deform-count': 'deform_count',
    'census': 'census',
}


def usage() -> str:
    return 'usage: kodaira {' + ','.join(SUBCOMMANDS) + '} [options] [--json]'


def run(argv: List[str], stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    """Run one subcommand and return its exit code; nothing is computed before the options parse."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    if not argv or argv[0] not in SUBCOMMANDS:
        given = argv[0] if argv else ''
        stderr.write(f"Unknown subcommand {given!r}\n{usage()}\n")
        return EXIT_INPUT_ERROR

    name = SUBCOMMANDS[argv[0]]
    command = load_command_class(get_commands()[name], name)
    parser = command.create_parser('kodaira', argv[0])
    try:
        options = parser.parse_args(argv[1:])
    except CommandError as exc:
        stderr.write(f"{exc}\n")
        return EXIT_INPUT_ERROR
    except SystemExit as exc:
        # --help
        return EXIT_OK if not exc.code else EXIT_INPUT_ERROR

    cmd_options = vars(options)
    args = cmd_options.pop('args', ())
    try:
        command.execute(*args, **cmd_options, stdout=stdout, stderr=stderr)
    except CommandError as exc:
        stderr.write(f"{exc}\n")
        return exc.returncode
    return EXIT_OK


def main():
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'app.settings')
    import django

    django.setup()
    sys.exit(run(sys.argv[1:]))
