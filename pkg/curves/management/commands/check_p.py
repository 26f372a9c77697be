from curves.configuration import ReducedDivisor
from curves.services import pair_degrees, property_P
from cli.base import KitCommand


class Command(KitCommand):
    help = 'Check property (P) for a reduced divisor of a curve configuration'

    def add_arguments(self, parser):
        parser.add_argument('--config', required=True, help='Configuration JSON document')
        parser.add_argument(
            '--divisor',
            nargs='+',
            default=None,
            help='Component ids of the divisor (default: every curve)'
        )

    def handle(self, *args, **options):
        cfg = self.load_configuration(options['config'])
        if options['divisor'] is None:
            divisor = cfg.full_divisor()
        else:
            divisor = ReducedDivisor.of(options['divisor'])
            cfg.check_divisor(divisor)

        result = property_P(cfg, divisor)
        payload = {
            'divisor': list(divisor),
            'holds': result.holds,
            'witness': result.witness,
            'witness_degree': result.witness_degree,
            'pair_degrees': pair_degrees(cfg, divisor),
        }
        if result.holds:
            lines = [self.style.SUCCESS(f'Property (P) holds for {len(divisor)} components')]
        else:
            lines = [f'Property (P) fails: {result.witness}·(D - {result.witness}) = {result.witness_degree}']
        self.emit(options, payload, lines)
        self.verdict(result.holds, f'property (P) fails at {result.witness}')
