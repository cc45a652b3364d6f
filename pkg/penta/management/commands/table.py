from django.conf import settings

from core.commands import BifuzzyCommand
from core.exceptions import VerificationFailed
from penta.norms import parse_couple
from penta.representation import TABLE_ORDER
from penta.tables import (
    OPERATORS,
    check_operator,
    check_truth_table,
    generate_truth_table,
    render_truth_table,
)


def check_summary(table, mismatches):
    """Lignes « OK: ... » ou « MISMATCH: ... » suivies des cellules en écart"""
    size = table.size()
    if not mismatches:
        return [f"OK: {size}/{size} cells match Table {table.number}"]
    lines = [f"MISMATCH: {len(mismatches)}/{size} cells differ from Table {table.number}"]
    for m in mismatches:
        where = f"row {m.row}, column {m.column}" if m.column else f"row {m.row}"
        lines.append(f"  {where}: got {m.got}, expected {m.expected}")
    return lines


def table_payload(table, mismatches=None):
    if table.is_unary:
        cells = {row: cells[0] for row, cells in zip(TABLE_ORDER, table.cells)}
    else:
        cells = {row: dict(zip(TABLE_ORDER, cells)) for row, cells in zip(TABLE_ORDER, table.cells)}
    data = {
        'operator': table.operator,
        'table': table.number,
        'couple': table.couple,
        'cells': cells,
    }
    if mismatches is not None:
        data['matches'] = not mismatches
        data['mismatches'] = [
            {'row': m.row, 'column': m.column, 'got': m.got, 'expected': m.expected}
            for m in mismatches
        ]
    return data


class Command(BifuzzyCommand):
    help = "Generate the truth table of a connective over the five crisp constants"

    def add_arguments(self, parser):
        parser.add_argument('operator', help=f"One of: {', '.join(OPERATORS)}, or 'all'")
        parser.add_argument('--couple', default=None, help="t-norm/t-conorm couple (default from settings)")
        parser.add_argument('--check', action='store_true', help="Compare with the reference tables")

    def handle(self, *args, **options):
        operator = options['operator']
        operators = list(OPERATORS) if operator == 'all' else [check_operator(operator)]
        couple = parse_couple(options['couple'] or getattr(settings, 'BIFUZZY_DEFAULT_COUPLE', 'min_max'))

        blocks = []
        payloads = []
        failed = 0
        for name in operators:
            table = generate_truth_table(name, couple)
            text = render_truth_table(table)
            mismatches = None
            if options['check']:
                mismatches = check_truth_table(table)
                failed += bool(mismatches)
                text += '\n'.join(check_summary(table, mismatches)) + '\n'
            blocks.append(text)
            payloads.append(table_payload(table, mismatches))

        payload = payloads[0] if operator != 'all' else {'couple': couple.name, 'tables': payloads}
        self.emit(options, payload, '\n'.join(blocks))

        if failed:
            raise VerificationFailed(f"{failed} table(s) differ from the reference")
