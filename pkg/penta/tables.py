# penta/tables.py
"""
Tables de vérité des sept connecteurs.

Les tables sont dérivées des opérateurs vectoriels appliqués aux cinq
constantes. Les tables de référence ci-dessous (transcrites une fois pour
toutes) ne servent qu'à la comparaison.
"""
import logging
from dataclasses import dataclass

from core.exceptions import NonCrispResultError, UsageError

from .algebra import BINARY_OPERATORS, UNARY_OPERATORS
from .norms import MIN_MAX
from .representation import CONSTANTS_BY_SYMBOL, TABLE_ORDER, crisp_label

logger = logging.getLogger(__name__)

# Ordre de publication : nom -> (numéro de table, symbole ASCII)
OPERATORS = {
    'disjunction': (1, 'OR'),
    'conjunction': (2, 'AND'),
    'complement': (3, '~'),
    'negation': (4, 'NOT'),
    'dual': (5, 'DUAL'),
    'implication': (6, '->'),
    'equivalence': (7, '<->'),
}

# Tables de référence, lignes et colonnes dans l'ordre t, i, u, c, f
REFERENCE_TABLES = {
    'disjunction': (
        'ttttt',
        'tiiii',
        'tiuiu',
        'tiicc',
        'tiucf',
    ),
    'conjunction': (
        'tiucf',
        'iiiif',
        'uiuif',
        'ciicf',
        'fffff',
    ),
    'complement': ('f', 'i', 'u', 'c', 't'),
    'negation': ('f', 'i', 'c', 'u', 't'),
    'dual': ('t', 'i', 'c', 'u', 'f'),
    'implication': (
        'tiucf',
        'tiiii',
        'tiuiu',
        'tiicc',
        'ttttt',
    ),
    'equivalence': (
        'tiucf',
        'iiiii',
        'uiuiu',
        'ciicc',
        'fiuct',
    ),
}


@dataclass(frozen=True)
class TruthTable:
    operator: str
    couple: str
    cells: tuple

    @property
    def is_unary(self):
        return self.operator in UNARY_OPERATORS

    @property
    def number(self):
        return OPERATORS[self.operator][0]

    @property
    def symbol(self):
        return OPERATORS[self.operator][1]

    def cell(self, row, column=None):
        r = TABLE_ORDER.index(row)
        if self.is_unary:
            return self.cells[r][0]
        return self.cells[r][TABLE_ORDER.index(column)]

    def size(self):
        return sum(len(row) for row in self.cells)


@dataclass(frozen=True)
class Mismatch:
    row: str
    column: str
    got: str
    expected: str


def check_operator(name):
    if name not in OPERATORS:
        raise UsageError(
            f"unknown operator '{name}' (expected one of: {', '.join(OPERATORS)})"
        )
    return name


def _label_or_fail(operator, result, operands):
    symbol = crisp_label(result)
    if symbol is None:
        raise NonCrispResultError(
            f"{operator}{operands} gave non-crisp vector {result.components()!r}"
        )
    return symbol


def generate_truth_table(operator, couple=MIN_MAX):
    """
    Applique l'opérateur à toutes les constantes (ou paires de constantes)
    et ramène chaque résultat à son symbole.
    """
    check_operator(operator)
    logger.debug(f"Génération de la table {operator} avec {couple.name}")
    rows = []
    for row in TABLE_ORDER:
        x = CONSTANTS_BY_SYMBOL[row].vector
        if operator in UNARY_OPERATORS:
            result = UNARY_OPERATORS[operator](x)
            rows.append((_label_or_fail(operator, result, (row,)),))
            continue
        function = BINARY_OPERATORS[operator]
        cells = []
        for column in TABLE_ORDER:
            y = CONSTANTS_BY_SYMBOL[column].vector
            result = function(x, y, couple)
            cells.append(_label_or_fail(operator, result, (row, column)))
        rows.append(tuple(cells))
    return TruthTable(operator=operator, couple=couple.name, cells=tuple(rows))


def reference_table(operator):
    """Table de référence sous forme de TruthTable"""
    check_operator(operator)
    cells = tuple(tuple(row) for row in REFERENCE_TABLES[operator])
    return TruthTable(operator=operator, couple='reference', cells=cells)


def check_truth_table(table):
    """Liste des cellules qui diffèrent de la table de référence"""
    expected = reference_table(table.operator)
    mismatches = []
    for r, row in enumerate(TABLE_ORDER):
        for k, got in enumerate(table.cells[r]):
            want = expected.cells[r][k]
            if got != want:
                column = '' if table.is_unary else TABLE_ORDER[k]
                mismatches.append(Mismatch(row, column, got, want))
    return mismatches


def render_truth_table(table):
    """
    Rendu texte fixe :

        OR | t i u c f
        ---+----------
        t  | t t t t t
    """
    width = len(table.symbol)
    header = ' ' if table.is_unary else ' '.join(TABLE_ORDER)
    lines = [
        f"{table.symbol.ljust(width)} | {header}".rstrip(),
        '-' * (width + 1) + '+' + '-' * (len(header) + 1),
    ]
    for row, cells in zip(TABLE_ORDER, table.cells):
        lines.append(f"{row.ljust(width)} | {' '.join(cells)}")
    return '\n'.join(lines) + '\n'
