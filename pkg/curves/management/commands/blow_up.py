from curves.api.serializers import configuration_document
from curves.services import blow_up
from cli.base import KitCommand


class Command(KitCommand):
    help = 'Blow up a marked point of a curve configuration'

    def add_arguments(self, parser):
        parser.add_argument('--config', required=True, help='Configuration JSON document')
        parser.add_argument('--point', required=True, help='Marked point id')
        parser.add_argument('--exceptional-id', default=None, help='Id for the exceptional curve')

    def handle(self, *args, **options):
        cfg = self.load_configuration(options['config'])
        result = blow_up(cfg, options['point'], exceptional_id=options['exceptional_id'])
        payload = {
            'exceptional_id': result.exceptional_id,
            'config': configuration_document(result.config),
        }
        lines = [f'Exceptional curve: {result.exceptional_id}']
        for node in result.config.nodes:
            lines.append(f'  {node.id}: C² = {node.self_int}')
        self.emit(options, payload, lines)
