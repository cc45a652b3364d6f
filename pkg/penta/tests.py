import json
import math
from io import StringIO
from unittest import mock

import numpy as np
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase
from hypothesis import given, strategies as st

from core.exceptions import AmbiguousPreimageError, ClosureError, DomainError, UsageError
from core.values import BifuzzyValue, TransformMode, complement as value_complement

from .algebra import (
    complement, dual, equivalence, implication, intersection, negation, union,
)
from .norms import (
    LUKASIEWICZ, MIN_MAX, PRODUCT_PROBSUM, CoupleKind, NormCouple, parse_couple, parse_couples,
)
from .representation import (
    CONSTANTS_BY_SYMBOL, PentaValue, crisp_constants, crisp_label, from_penta, to_penta,
)
from .tables import (
    OPERATORS, REFERENCE_TABLES, TruthTable, check_truth_table, generate_truth_table,
    reference_table, render_truth_table,
)

COUPLES = [MIN_MAX, PRODUCT_PROBSUM, LUKASIEWICZ, NormCouple.frank(2)]

unit = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)
values = st.builds(BifuzzyValue, unit, unit)
modes = st.sampled_from(list(TransformMode))
pentas = st.builds(to_penta, values, modes)
couples = st.sampled_from(COUPLES + [NormCouple.frank(0.5), NormCouple.frank(10)])


def grid(n=200):
    axis = np.arange(n + 1) / n
    return [BifuzzyValue(float(mu), float(nu)) for mu in axis for nu in axis]


def assertSameVector(test, x, y, tolerance=1e-12):
    for a, b in zip(x.components(), y.components()):
        test.assertAlmostEqual(a, b, delta=tolerance)


class RepresentationTests(SimpleTestCase):

    def test_worked_example(self):
        p = to_penta(BifuzzyValue(0.7, 0.2), TransformMode.STANDARD)
        self.assertAlmostEqual(p.t, 0.5, delta=1e-12)
        self.assertAlmostEqual(p.u, 0.1, delta=1e-12)
        self.assertAlmostEqual(p.i, 0.4, delta=1e-12)
        self.assertEqual((p.c, p.f), (0.0, 0.0))

    def test_corners_are_crisp(self):
        cases = {(1, 0): 't', (0, 1): 'f', (1, 1): 'c', (0, 0): 'u', (0.5, 0.5): 'i'}
        for (mu, nu), symbol in cases.items():
            with self.subTest(mu=mu, nu=nu):
                self.assertEqual(crisp_label(to_penta(BifuzzyValue(mu, nu))), symbol)

    def test_partition_of_unity_on_grid(self):
        for mode in TransformMode:
            for v in grid():
                total = sum(to_penta(v, mode).distribution())
                self.assertLessEqual(abs(total - 1.0), 1e-12)

    def test_standard_ambiguity_closed_form(self):
        for v in grid():
            expected = 2 * min(v.mu, v.nu, 1 - v.mu, 1 - v.nu)
            self.assertAlmostEqual(to_penta(v).i, expected, delta=1e-12)

    def test_round_trip_on_grid(self):
        for v in grid():
            back = from_penta(to_penta(v))
            self.assertAlmostEqual(back.mu, v.mu, delta=1e-12)
            self.assertAlmostEqual(back.nu, v.nu, delta=1e-12)

    def test_ambiguous_preimage(self):
        with self.assertRaises(AmbiguousPreimageError):
            from_penta(PentaValue(t=0.3, f=0.3))
        with self.assertRaises(AmbiguousPreimageError):
            from_penta(PentaValue(c=0.2, u=0.2))

    def test_invalid_vectors(self):
        with self.assertRaises(DomainError):
            PentaValue(t=-0.1)
        with self.assertRaises(DomainError):
            PentaValue(t=0.6, f=0.6)
        with self.assertRaises(DomainError):
            PentaValue(t=float('inf'))

    def test_transform_is_lipschitz_on_grid(self):
        n = 100
        axis = np.arange(n + 1) / n
        for mode in TransformMode:
            table = np.array([
                [to_penta(BifuzzyValue(float(mu), float(nu)), mode).distribution() for nu in axis]
                for mu in axis
            ])
            jump = max(np.abs(np.diff(table, axis=0)).max(), np.abs(np.diff(table, axis=1)).max())
            with self.subTest(mode=mode.value):
                self.assertLessEqual(jump, 2.0 / n + 1e-12)

    @given(values, modes)
    def test_complement_commutes_with_transform(self, v, mode):
        self.assertEqual(to_penta(value_complement(v), mode), complement(to_penta(v, mode)))

    def test_constants(self):
        self.assertEqual([k.label for k in crisp_constants()], ['T', 'F', 'C', 'U', 'I'])
        self.assertEqual(CONSTANTS_BY_SYMBOL['i'].vector.i, 1.0)
        self.assertIsNone(crisp_label(PentaValue(t=0.5)))


class NormTests(SimpleTestCase):

    def test_parse_couple_aliases(self):
        self.assertIs(parse_couple('min').kind, CoupleKind.MIN_MAX)
        self.assertIs(parse_couple('product').kind, CoupleKind.PRODUCT_PROBSUM)
        self.assertIs(parse_couple('luk').kind, CoupleKind.LUKASIEWICZ)
        self.assertEqual(parse_couple('frank(2)'), NormCouple.frank(2))
        self.assertEqual(parse_couple('frank:0.5').s, 0.5)
        self.assertEqual(parse_couple('frank(10)').name, 'frank(10)')

    def test_parse_couple_errors(self):
        for text in ('drastic', 'frank(1)', 'frank(-2)', 'frank(x)', 'frank'):
            with self.subTest(text=text):
                with self.assertRaises(UsageError):
                    parse_couple(text)

    def test_parse_couples(self):
        names = [c.name for c in parse_couples('min_max, frank(2),product')]
        self.assertEqual(names, ['min_max', 'frank(2)', 'product_probsum'])
        with self.assertRaises(UsageError):
            parse_couples(',')

    def test_frank_parameter_is_validated(self):
        with self.assertRaises(DomainError):
            NormCouple.frank(1)
        with self.assertRaises(DomainError):
            NormCouple(CoupleKind.MIN_MAX, 2.0)

    def test_boundary_values(self):
        for couple in COUPLES:
            with self.subTest(couple=couple.name):
                self.assertAlmostEqual(couple.t_norm(0.3, 1.0), 0.3, delta=1e-12)
                self.assertAlmostEqual(couple.t_norm(0.3, 0.0), 0.0, delta=1e-12)
                self.assertAlmostEqual(couple.t_conorm(0.3, 0.0), 0.3, delta=1e-12)

    def test_parameter_keeps_its_digits(self):
        self.assertEqual(NormCouple.frank(1 + 1e-9).name, 'frank(1.000000001)')
        self.assertEqual(NormCouple.frank(1e200).name, 'frank(1e+200)')
        self.assertEqual(NormCouple.frank(0.5).name, 'frank(0.5)')
        self.assertEqual(parse_couple(NormCouple.frank(1 + 1e-9).name), NormCouple.frank(1 + 1e-9))

    def test_extreme_frank_parameters(self):
        for s in (1e200, 1e-200):
            couple = NormCouple.frank(s)
            with self.subTest(s=s):
                for a in np.arange(11) / 10:
                    self.assertAlmostEqual(couple.t_norm(float(a), 1.0), a, delta=1e-12)
                    self.assertAlmostEqual(couple.t_conorm(float(a), 0.0), a, delta=1e-12)
                for operator in OPERATORS:
                    self.assertEqual(check_truth_table(generate_truth_table(operator, couple)), [])
        # s -> infini donne Lukasiewicz, s -> 0 donne min
        self.assertAlmostEqual(NormCouple.frank(1e200).t_norm(0.7, 0.6), 0.3, delta=1e-12)
        self.assertAlmostEqual(NormCouple.frank(1e-200).t_norm(0.7, 0.6), 0.6, delta=1e-12)

    def test_frank_values(self):
        couple = NormCouple.frank(2)
        self.assertAlmostEqual(couple.t_norm(0.5, 0.5), math.log2(1 + (math.sqrt(2) - 1) ** 2), delta=1e-14)
        for s in (1 + 1e-9, 1 - 1e-9):
            with self.subTest(s=s):
                self.assertAlmostEqual(NormCouple.frank(s).t_norm(0.3, 0.6), 0.18, delta=1e-8)

    @given(st.sampled_from([1 + 1e-9, 1 - 1e-9, 1e200, 1e-200, 0.3]), unit, unit)
    def test_frank_equation_at_extreme_parameters(self, s, a, b):
        couple = NormCouple.frank(s)
        self.assertAlmostEqual(couple.t_norm(a, b) + couple.t_conorm(a, b), a + b, delta=1e-12)

    @given(couples, unit, unit)
    def test_frank_equation(self, couple, a, b):
        self.assertAlmostEqual(couple.t_norm(a, b) + couple.t_conorm(a, b), a + b, delta=1e-12)

    @given(couples, unit, unit)
    def test_norm_below_conorm(self, couple, a, b):
        self.assertLessEqual(couple.t_norm(a, b), min(a, b) + 1e-12)
        self.assertGreaterEqual(couple.t_conorm(a, b), max(a, b) - 1e-12)


class AlgebraTests(SimpleTestCase):

    @given(pentas)
    def test_involutions(self, x):
        self.assertEqual(complement(complement(x)), x)
        self.assertEqual(negation(negation(x)), x)
        self.assertEqual(dual(dual(x)), x)
        self.assertEqual(dual(complement(x)), negation(x))

    @given(couples, pentas, pentas)
    def test_de_morgan(self, couple, x, y):
        assertSameVector(self, complement(union(x, y, couple)), intersection(complement(x), complement(y), couple))
        assertSameVector(self, complement(intersection(x, y, couple)), union(complement(x), complement(y), couple))

    @given(couples, pentas, pentas)
    def test_commutativity(self, couple, x, y):
        assertSameVector(self, union(x, y, couple), union(y, x, couple))
        assertSameVector(self, intersection(x, y, couple), intersection(y, x, couple))

    @given(couples, pentas, pentas)
    def test_closure(self, couple, x, y):
        for result in (union(x, y, couple), intersection(x, y, couple)):
            self.assertLessEqual(result.t + result.c + result.u + result.f, 1.0 + 1e-12)
            for component in result.distribution():
                self.assertGreaterEqual(component, -1e-12)

    @given(couples, pentas, pentas, pentas)
    def test_union_is_monotone_in_t_and_f(self, couple, x, z, y):
        low, high = sorted((x, z), key=lambda p: p.t)
        self.assertLessEqual(union(low, y, couple).t, union(high, y, couple).t + 1e-12)
        self.assertLessEqual(union(y, low, couple).t, union(y, high, couple).t + 1e-12)
        low, high = sorted((x, z), key=lambda p: p.f)
        self.assertLessEqual(union(low, y, couple).f, union(high, y, couple).f + 1e-12)
        self.assertLessEqual(union(y, low, couple).f, union(y, high, couple).f + 1e-12)

    def test_union_of_false_with_extreme_frank(self):
        f = CONSTANTS_BY_SYMBOL['f'].vector
        for s in (1e200, 1e-200):
            with self.subTest(s=s):
                self.assertEqual(crisp_label(union(f, f, NormCouple.frank(s))), 'f')

    def test_min_max_is_idempotent(self):
        x = to_penta(BifuzzyValue(0.75, 0.25))
        self.assertEqual(union(x, x), x)
        self.assertEqual(intersection(x, x), x)

    def test_product_is_not_idempotent(self):
        x = to_penta(BifuzzyValue(0.75, 0.25))
        self.assertAlmostEqual(union(x, x, PRODUCT_PROBSUM).t, 0.75, delta=1e-12)

    def test_cu_preservation(self):
        x1 = to_penta(BifuzzyValue(0.4, 0.8))
        x2 = to_penta(BifuzzyValue(0.1, 0.5))
        kept = union(x1, x2, MIN_MAX)
        self.assertEqual(kept.c * kept.u, 0.0)
        broken = union(x1, x2, PRODUCT_PROBSUM)
        self.assertAlmostEqual(broken.c, 0.08, delta=1e-12)
        self.assertAlmostEqual(broken.u, 0.16, delta=1e-12)

    def test_implication_of_constants(self):
        t, f = CONSTANTS_BY_SYMBOL['t'].vector, CONSTANTS_BY_SYMBOL['f'].vector
        self.assertEqual(crisp_label(implication(f, t)), 't')
        self.assertEqual(crisp_label(implication(t, f)), 'f')
        self.assertEqual(crisp_label(equivalence(f, f)), 't')

    def test_closure_error_wraps_domain_error(self):
        wild = NormCouple(CoupleKind.LUKASIEWICZ)
        with mock.patch.object(NormCouple, 't_conorm', lambda self, a, b: 2.0):
            with self.assertRaises(ClosureError) as cm:
                union(PentaValue(t=0.5), PentaValue(t=0.5), wild)
        self.assertEqual(len(cm.exception.operands), 2)


class TruthTableTests(SimpleTestCase):

    def test_all_tables_match_reference(self):
        for couple in COUPLES:
            for operator in OPERATORS:
                with self.subTest(couple=couple.name, operator=operator):
                    table = generate_truth_table(operator, couple)
                    self.assertEqual(check_truth_table(table), [])

    def test_cell_count(self):
        total = sum(generate_truth_table(operator).size() for operator in OPERATORS)
        self.assertEqual(total, 115)

    def test_cell_lookup(self):
        table = generate_truth_table('conjunction')
        self.assertEqual(table.cell('u', 'c'), 'i')
        self.assertEqual(generate_truth_table('negation').cell('c'), 'u')

    def test_render_disjunction(self):
        expected = (
            "OR | t i u c f\n"
            "---+----------\n"
            "t  | t t t t t\n"
            "i  | t i i i i\n"
            "u  | t i u i u\n"
            "c  | t i i c c\n"
            "f  | t i u c f\n"
        )
        self.assertEqual(render_truth_table(generate_truth_table('disjunction')), expected)

    def test_mismatch_is_reported(self):
        cells = list(reference_table('conjunction').cells)
        cells[0] = ('t', 'i', 'u', 'c', 't')
        table = TruthTable('conjunction', 'min_max', tuple(cells))
        [mismatch] = check_truth_table(table)
        self.assertEqual((mismatch.row, mismatch.column, mismatch.got, mismatch.expected), ('t', 'f', 't', 'f'))

    def test_unknown_operator(self):
        with self.assertRaises(UsageError):
            generate_truth_table('xor')


class TableCommandTests(SimpleTestCase):

    def call(self, *args, **options):
        out = StringIO()
        call_command('table', *args, stdout=out, **options)
        return out.getvalue()

    def test_check_disjunction(self):
        self.assertIn("OK: 25/25 cells match Table 1", self.call('disjunction', check=True))

    def test_check_dual_and_implication(self):
        self.assertIn("OK: 5/5 cells match Table 5", self.call('dual', check=True))
        self.assertIn("OK: 25/25 cells match Table 6", self.call('implication', check=True))

    def test_check_all_with_frank(self):
        output = self.call('all', check=True, couple='frank(2)')
        self.assertEqual(output.count("OK: "), 7)

    def test_check_all_with_extreme_frank(self):
        for couple in ('frank(1e200)', 'frank(1e-200)'):
            with self.subTest(couple=couple):
                self.assertEqual(self.call('all', check=True, couple=couple).count("OK: "), 7)

    def test_unknown_operator_exit_code(self):
        with self.assertRaises(CommandError) as cm:
            self.call('xor')
        self.assertEqual(cm.exception.returncode, 2)

    def test_unknown_couple_exit_code(self):
        with self.assertRaises(CommandError) as cm:
            self.call('disjunction', couple='drastic')
        self.assertEqual(cm.exception.returncode, 2)

    def test_mismatch_exit_code(self):
        altered = dict(REFERENCE_TABLES, disjunction=('ttttt', 'tiiii', 'tiuiu', 'tiicc', 'tiucc'))
        out = StringIO()
        with mock.patch.dict(REFERENCE_TABLES, altered):
            with self.assertRaises(CommandError) as cm:
                call_command('table', 'disjunction', check=True, stdout=out)
        self.assertEqual(cm.exception.returncode, 3)
        self.assertIn("MISMATCH: 1/25 cells differ from Table 1", out.getvalue())
        self.assertIn("  row f, column f: got f, expected c", out.getvalue())

    def test_json_output(self):
        data = json.loads(self.call('negation', as_json=True))
        self.assertEqual(data['table'], 4)
        self.assertEqual(data['cells'], {'t': 'f', 'i': 'i', 'u': 'c', 'c': 'u', 'f': 't'})
