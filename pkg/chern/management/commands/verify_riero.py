from chern.exceptions import ResidualNonzero
from chern.services import threefold_numbers, verify_riero
from cli.base import KitCommand


class Command(KitCommand):
    help = 'Recompute χ(T_X) of the conic bundle and check it against the h¹ - h² formula'

    def add_arguments(self, parser):
        parser.add_argument(
            '--threefold-numbers',
            action='store_true',
            help='Also report ∫c₁³, ∫c₁c₂ and the Euler number of X'
        )

    def handle(self, *args, **options):
        try:
            result = verify_riero()
        except ResidualNonzero as exc:
            self.emit(options, {'holds': False, 'residual': exc.monomials}, [str(exc)])
            self.verdict(False, str(exc))
            return

        payload = result.to_dict()
        lines = [
            f'χ(T_X)   = {result.chi_T_X}',
            f'target   = {result.target}',
            'residual = ' + (', '.join(f'{m}: {c}' for m, c in result.residual.to_dict().items()) or '0'),
        ]
        if options['threefold_numbers']:
            numbers = threefold_numbers()
            payload['threefold_numbers'] = {name: value.to_dict() for name, value in numbers.items()}
            lines += [f'{name} = {value}' for name, value in numbers.items()]
        lines.append(self.style.SUCCESS('h¹ - h² = h⁰ + c₂(E) - c₁(E)c₁(S) - 2c₁²(S) + 7χ(𝒪_S) holds'))
        self.emit(options, payload, lines)
