from curves.api.serializers import configuration_document
from curves.services import blow_down
from cli.base import KitCommand


class Command(KitCommand):
    help = 'Contract a (-1)-curve of a curve configuration'

    def add_arguments(self, parser):
        parser.add_argument('--config', required=True, help='Configuration JSON document')
        parser.add_argument('--curve', required=True, help='Id of the (-1)-curve to contract')

    def handle(self, *args, **options):
        cfg = self.load_configuration(options['config'])
        result = blow_down(cfg, options['curve'])
        payload = {
            'contracted': options['curve'],
            'image_point': result.image_point,
            'config': configuration_document(result.config),
        }
        lines = [f'Contracted {options["curve"]}; image point {result.image_point or "-"}']
        for node in result.config.nodes:
            lines.append(f'  {node.id}: C² = {node.self_int}')
        self.emit(options, payload, lines)
