from django.conf import settings

from cli.base import KitCommand
from fibers.services import census


class Command(KitCommand):
    help = 'Property (P) census over the Kodaira catalog and over trees of (-2)-curves'

    def add_arguments(self, parser):
        parser.add_argument('--max-n', type=int, default=settings.CENSUS_MAX_N,
                            help=f'Largest n for In, mIn and Instar (default: {settings.CENSUS_MAX_N})')
        parser.add_argument('--max-components', type=int, default=settings.TREE_MAX_COMPONENTS,
                            help=f'Largest tree in the tree census, 0 to skip (default: {settings.TREE_MAX_COMPONENTS})')

    def handle(self, *args, **options):
        report = census(max_n=options['max_n'], max_components=options['max_components'])

        lines = []
        for entry in report.entries:
            marks = ', '.join(f'D² = {d.d_squared}' + ('' if d.full else ' (partial)') for d in entry.p_divisors)
            lines.append(f'{entry.label:>6}: {entry.subsets} sub-divisors, (P): {marks or "none"}')
        if report.trees:
            lines.append(f'Trees: {report.trees.total} up to {report.trees.max_components} components, '
                         f'{len(report.trees.exceptions)} satisfy (P)')
        lines.append(self.style.SUCCESS('Census passed') if report.ok else self.style.ERROR('Census failed'))

        self.emit(options, report.to_dict(), lines)
        self.verdict(report.ok, f'census found {len(report.violations)} violations')
