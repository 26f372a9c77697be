from cli.base import KitCommand, InputError
from discriminant.api.serializers import ChainSerializer
from discriminant.services import decide_a0, mueps_table, verify_inductive


class Command(KitCommand):
    help = 'Certify D·(D - 3K) - 4K² ≥ 0 along a chain of blow-downs, or decide the a(S) = 0 case'

    def add_arguments(self, parser):
        parser.add_argument('--chain', help='Chain JSON document (surface, config, divisor, contractions)')
        parser.add_argument('--table', action='store_true', help='Print the (μ, ε) case table and exit')

    def handle(self, *args, **options):
        if options['table']:
            rows = mueps_table()
            lines = [
                f"μ={r['mu']} ε={r['eps']}  increment {r['increment']:>3}  {r['case_label']}" for r in rows
            ]
            self.emit(options, {'mueps': rows}, lines)
            return
        if not options['chain']:
            raise InputError('chain: --chain is required unless --table is given')

        chain = self.load_document(options['chain'], ChainSerializer)
        if chain.surface.alg_dim == 0:
            decision = decide_a0(chain.surface, chain.config, chain.divisor)
            lines = ['a(S) = 0: D = 0' if decision.verdict else
                     f'a(S) = 0: D fails property (P) at {decision.witness}']
            self.emit(options, {'a0_decision': decision.to_dict()}, lines)
            self.verdict(decision.verdict, f'nonzero divisor fails property (P) at {decision.witness}')
            return

        certificate = verify_inductive(chain.surface, chain.config, chain.divisor, chain.contractions)
        lines = []
        for step in certificate.chain:
            lines.append(f'  contract {step.contracted}: μ={step.mu} ε={step.eps} '
                         f'increment {step.delta_value} ({step.case_label.value})')
        lines.append(f'Base value {certificate.base_value}, final value {certificate.final_value}')
        lines.append(self.style.SUCCESS('Inequality holds') if certificate.verdict else self.style.ERROR('Inequality fails'))
        self.emit(options, {'certificate': certificate.to_dict()}, lines)
        self.verdict(certificate.verdict, f'final value {certificate.final_value} < 0')
