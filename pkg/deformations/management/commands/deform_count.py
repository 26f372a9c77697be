from cli.base import KitCommand
from deformations.services import classify
from surfaces.api.serializers import BundleInvariantsSerializer, SurfaceModelSerializer


class Command(KitCommand):
    help = (
        'Compute h¹(T_X) - h²(T_X) for a conic bundle and classify whether it is positive; '
        'exits 1 only for out_of_hypotheses'
    )

    def add_arguments(self, parser):
        parser.add_argument('--surface', required=True, help='Surface JSON document')
        parser.add_argument('--bundle', required=True, help='Rank-3 bundle JSON document')
        parser.add_argument('--h0', type=int, default=0, help='h⁰(T_X), taken as given (default 0)')
        parser.add_argument(
            '--no-relative-picard-one',
            action='store_false',
            dest='relative_picard_one',
            help='X → S does not have relative Picard number 1'
        )

    def handle(self, *args, **options):
        surface = self.load_document(options['surface'], SurfaceModelSerializer, 'surface')
        bundle = self.load_document(options['bundle'], BundleInvariantsSerializer, 'bundle')
        report = classify(surface, bundle, options['h0'], options['relative_picard_one'])

        lines = [
            f'h1 - h2 = {report.h1_minus_h2}',
            f'c2(E) - c1(E)^2/3 = {report.banlep_lhs}',
            f'chern gap = {report.chern_gap}',
            f'verdict: {report.verdict.value}',
        ]
        lines += [f'  - {note}' for note in report.notes]
        self.emit(options, report.to_dict(), lines)
        # equality verdicts are answers too; only contradictory numerics fail
        self.verdict(report.consistent, f'The invariants contradict the hypotheses ({report.verdict.value})')
