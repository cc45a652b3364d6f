from core.commands import BifuzzyCommand
from core.exceptions import VerificationFailed

from verification.services import VerificationService


class Command(BifuzzyCommand):
    help = "Run the seeded law suite (partition, round trip, Frank equation, De Morgan, modularity, tables...)"

    def add_arguments(self, parser):
        parser.add_argument('--samples', type=int, default=None, help="Random draws per law")
        parser.add_argument('--seed', type=int, default=None, help="Generator seed (64-bit)")
        parser.add_argument(
            '--couples', default=None,
            help="Comma-separated couples, e.g. min_max,product,frank(2)",
        )
        self.add_mode_argument(parser)

    def handle(self, *args, **options):
        service = VerificationService(
            samples=options['samples'],
            seed=options['seed'],
            couples=options['couples'],
            mode=options['mode'],
        )
        report = service.run()
        self.emit(options, report.as_dict(), report.render_text())
        if not report.passed:
            raise VerificationFailed(f"{len(report.failures)} law(s) failed")
