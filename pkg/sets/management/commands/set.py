from core.commands import BifuzzyCommand
from core.exceptions import UsageError
from core.utils import render_record

from measures.sets import (
    set_entropy,
    set_mean_entropy,
    set_mean_syntropy,
    set_profile,
    set_similarity,
    set_syntropy,
)
from sets.formats import dump_set, load_set

OPERATIONS = ('entropy', 'syntropy', 'similarity', 'describe', 'convert')


class Command(BifuzzyCommand):
    help = "Set-level measures over CSV/JSON files: entropy, syntropy, similarity, describe, convert"

    def add_arguments(self, parser):
        parser.add_argument('op', help=f"One of: {', '.join(OPERATIONS)}")
        parser.add_argument('files', nargs='+', help="Set file(s), .csv or .json")
        parser.add_argument('--output', default=None, help="Destination file for convert")
        self.add_mode_argument(parser)

    def handle(self, *args, **options):
        op = options['op']
        files = options['files']
        if op not in OPERATIONS:
            raise UsageError(f"unknown set operation '{op}' (expected one of: {', '.join(OPERATIONS)})")
        expected = 2 if op == 'similarity' else 1
        if len(files) != expected:
            raise UsageError(f"set {op} takes {expected} file(s), got {len(files)}")
        if op == 'convert' and not options['output']:
            raise UsageError("set convert requires --output")

        mode = self.get_mode(options)
        s = load_set(files[0])

        if op == 'convert':
            dump_set(s, options['output'])
            data = {'name': s.name, 'elements': len(s), 'output': options['output']}
        elif op == 'similarity':
            other = load_set(files[1])
            data = {'mode': mode.value, 'elements': len(s), 'similarity': set_similarity(s, other, mode)}
        elif op == 'entropy':
            total, vector = set_entropy(s, mode)
            data = {
                'name': s.name,
                'mode': mode.value,
                'elements': len(s),
                'entropy': total,
                'vector': vector._asdict(),
                'mean': set_mean_entropy(s, mode),
            }
        elif op == 'syntropy':
            total, vector = set_syntropy(s, mode)
            data = {
                'name': s.name,
                'mode': mode.value,
                'elements': len(s),
                'syntropy': total,
                'vector': vector._asdict(),
                'mean': set_mean_syntropy(s, mode),
            }
        else:
            profile = set_profile(s, mode)
            if options.get('as_json'):
                self.emit(options, {'name': s.name, 'mode': mode.value, 'elements': profile}, '')
                return
            records = {record.pop('label'): record for record in profile}
            self.stdout.write(render_record(records), ending='')
            return

        self.emit(options, data, render_record(data))
