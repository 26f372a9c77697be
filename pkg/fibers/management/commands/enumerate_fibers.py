from app.documents import dump_document
from cli.base import KitCommand
from curves.services import property_P, self_intersection
from fibers.catalog import FiberType, fiber, record_document
from fibers.services import enumerate_reduced_subdivisors


class Command(KitCommand):
    help = 'Emit a Kodaira fiber configuration and, optionally, its property (P) census'

    def add_arguments(self, parser):
        parser.add_argument('--type', required=True, dest='fiber_type',
                            help='Fiber kind (In, mIn, I0star, IVstar, ...) or label (I5, 2I3, IV*)')
        parser.add_argument('--n', type=int, default=0, help='Parameter n for In, mIn and Instar')
        parser.add_argument('--m', type=int, default=1, help='Multiplicity for mIn')
        parser.add_argument('--census-p', action='store_true',
                            help='Also list every reduced sub-divisor with its property (P) verdict')

    def handle(self, *args, **options):
        record = fiber(FiberType.from_kind(options['fiber_type'], options['n'], options['m']))
        as_json = options['as_json']

        if as_json:
            self.stdout.write(dump_document(record_document(record), indent=None))
        else:
            self.stdout.write(self.style.SUCCESS(f'{record.label}: euler number {record.euler_number}'))
            for node in record.config.nodes:
                mult = record.component_multiplicities[node.id]
                self.stdout.write(f'  {node.id}: C² = {node.self_int}, multiplicity {mult}')

        if not options['census_p']:
            return
        for divisor in enumerate_reduced_subdivisors(record):
            result = property_P(record.config, divisor)
            line = {
                'type': record.label,
                'divisor': list(divisor),
                'property_P': result.holds,
                'witness': result.witness,
                'd_squared': self_intersection(record.config, divisor) if result.holds else None,
            }
            if as_json:
                self.stdout.write(dump_document(line, indent=None))
            elif result.holds:
                self.stdout.write(f'  (P) {" + ".join(divisor)}: D² = {line["d_squared"]}')
