import csv
import io

import numpy as np

from core.commands import BifuzzyCommand
from core.exceptions import UsageError
from core.utils import format_number
from core.values import BifuzzyValue, distance_d
from penta.representation import to_penta

from measures.scalar import entropy, syntropy


def _component(name):
    return lambda penta: getattr(penta, name)


# Mesures disponibles pour une valeur à cinq indices
MEASURES = {
    'entropy': lambda penta: entropy(penta)[0],
    'syntropy': lambda penta: syntropy(penta)[0],
    'ambiguity': _component('i'),
    'truth': _component('t'),
    'falsity': _component('f'),
    'inconsistency': _component('c'),
    'incompleteness': _component('u'),
}


def measure_grid(measure, mode, resolution):
    """Valeurs de la mesure sur la grille {0, 1/N, ..., 1}², μ d'abord"""
    if measure not in MEASURES and measure != 'distance':
        raise UsageError(
            f"unknown measure '{measure}' (expected one of: {', '.join([*MEASURES, 'distance'])})"
        )
    if resolution < 2:
        raise UsageError(f"resolution must be >= 2, got {resolution}")

    axis = np.arange(resolution + 1) / resolution
    rows = []
    for mu in axis:
        for nu in axis:
            value = BifuzzyValue(float(mu), float(nu))
            if measure == 'distance':
                result = distance_d(value)
            else:
                result = MEASURES[measure](to_penta(value, mode))
            rows.append((value.mu, value.nu, result))
    return rows


class Command(BifuzzyCommand):
    help = "Print a CSV grid (mu,nu,value) of a measure over the unit square"

    def add_arguments(self, parser):
        parser.add_argument('--measure', default='entropy', help="Measure to sample (default: entropy)")
        parser.add_argument('--resolution', type=int, default=10, help="Grid steps N >= 2 (default: 10)")
        self.add_mode_argument(parser)

    def handle(self, *args, **options):
        mode = self.get_mode(options)
        rows = measure_grid(options['measure'], mode, options['resolution'])

        if options.get('as_json'):
            payload = {
                'measure': options['measure'],
                'mode': mode.value,
                'resolution': options['resolution'],
                'rows': [{'mu': mu, 'nu': nu, 'value': value} for mu, nu, value in rows],
            }
            self.emit(options, payload, '')
            return

        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator='\n')
        writer.writerow(['mu', 'nu', 'value'])
        for mu, nu, value in rows:
            writer.writerow([format_number(mu), format_number(nu), format_number(value)])
        self.stdout.write(buffer.getvalue(), ending='')
