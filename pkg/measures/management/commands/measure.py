from core.commands import BifuzzyCommand, parse_value
from core.exceptions import UsageError
from core.utils import render_record
from core.values import distance_d, distance_d_complementary
from penta.representation import to_penta

from measures.scalar import entropy, entropy_via_similarity, similarity, syntropy

KINDS = ('entropy', 'syntropy', 'similarity', 'distance')


class Command(BifuzzyCommand):
    help = (
        "Compute a measure: entropy/syntropy/distance of one value (MU NU) "
        "or the similarity of two values (MU1 NU1 MU2 NU2)"
    )

    def add_arguments(self, parser):
        parser.add_argument('kind', help=f"One of: {', '.join(KINDS)}")
        parser.add_argument('degrees', nargs='+', help="Degrees in [0,1]")
        self.add_mode_argument(parser)

    def handle(self, *args, **options):
        kind = options['kind']
        degrees = options['degrees']
        if kind not in KINDS:
            raise UsageError(f"unknown measure '{kind}' (expected one of: {', '.join(KINDS)})")
        expected = 4 if kind == 'similarity' else 2
        if len(degrees) != expected:
            raise UsageError(f"{kind} takes {expected} degrees, got {len(degrees)}")

        mode = self.get_mode(options)
        value = parse_value(*degrees[:2])
        data = {'measure': kind, 'mode': mode.value, 'mu': value.mu, 'nu': value.nu}

        if kind == 'similarity':
            other = parse_value(*degrees[2:])
            data.update({'mu2': other.mu, 'nu2': other.nu})
            data['value'] = similarity(to_penta(value, mode), to_penta(other, mode))
        elif kind == 'entropy':
            penta = to_penta(value, mode)
            data['value'], vector = entropy(penta)
            data['vector'] = vector._asdict()
            data['via_similarity'] = entropy_via_similarity(penta)
        elif kind == 'syntropy':
            data['value'], vector = syntropy(to_penta(value, mode))
            data['vector'] = vector._asdict()
        else:
            data['value'] = distance_d(value)
            data['complementary'] = distance_d_complementary(value)

        self.emit(options, data, render_record(data))
