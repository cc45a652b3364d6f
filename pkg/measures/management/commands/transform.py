from core.commands import BifuzzyCommand, parse_value
from core.utils import render_record

from measures.serializers import TransformRecordSerializer, transform_record


class Command(BifuzzyCommand):
    help = "Transform a bifuzzy value (mu, nu) into (tau, delta) and its five-valued representation"

    def add_arguments(self, parser):
        parser.add_argument('mu', help="Degree of membership in [0,1]")
        parser.add_argument('nu', help="Degree of non-membership in [0,1]")
        self.add_mode_argument(parser)

    def handle(self, *args, **options):
        value = parse_value(options['mu'], options['nu'])
        mode = self.get_mode(options)
        data = TransformRecordSerializer(transform_record(value, mode)).data
        self.emit(options, data, render_record(data))
