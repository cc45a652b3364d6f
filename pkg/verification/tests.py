import json
from io import StringIO

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, override_settings

from core.exceptions import UsageError
from core.values import TransformMode
from penta.norms import PRODUCT_PROBSUM

from .laws import (
    COUPLE_LAWS, GLOBAL_LAWS, SampleSource, law_closure, law_cu_preservation, law_idempotence,
    law_modularity, law_transform_continuity, law_truth_tables, law_union_monotonicity,
)
from .services import VerificationService


@override_settings(BIFUZZY_VERIFY_SAMPLES=300, BIFUZZY_VERIFY_GRID=20)
class VerificationServiceTests(SimpleTestCase):

    def test_default_run_passes(self):
        report = VerificationService().run()
        self.assertTrue(report.passed, report.render_text())
        self.assertEqual(len(report.results), len(GLOBAL_LAWS) + len(COUPLE_LAWS))
        self.assertEqual(report.couples, ('min_max',))

    def test_all_couples_pass_the_core_laws(self):
        report = VerificationService(couples='min_max,product,lukasiewicz,frank(0.5),frank(10)').run()
        required = {'frank_equation', 'de_morgan', 'commutativity', 'associativity',
                    'modularity', 'closure', 'truth_tables'}
        for result in report.results:
            if result.law in required:
                self.assertTrue(result.passed, f"{result.scope} {result.law}: {result.counterexample}")

    def test_product_counterexamples(self):
        report = VerificationService(couples='product').run()
        failed = {result.law for result in report.failures}
        self.assertEqual(failed, {'idempotence', 'cu_preservation'})
        for result in report.failures:
            self.assertTrue(result.counterexample)

    def test_balanced_mode(self):
        report = VerificationService(mode='balanced').run()
        self.assertTrue(report.passed, report.render_text())
        self.assertEqual(report.mode, 'balanced')

    def test_same_seed_same_report(self):
        first = VerificationService(seed=42).run().render_text()
        self.assertEqual(first, VerificationService(seed=42).run().render_text())

    def test_invalid_configuration(self):
        with self.assertRaises(UsageError):
            VerificationService(samples=0)
        with self.assertRaises(UsageError):
            VerificationService(couples='drastic')
        with self.assertRaises(UsageError):
            VerificationService(seed=2 ** 64)
        with self.assertRaises(UsageError):
            VerificationService(grid=1)

    def test_report_text(self):
        text = VerificationService(seed=7, samples=50).run().render_text()
        lines = text.splitlines()
        self.assertEqual(lines[0], "seed=7 samples=50 mode=standard couples=min_max")
        self.assertTrue(lines[1].startswith("PASS  all partition_of_unity"))
        self.assertTrue(lines[1].endswith("(882 checks)"))
        self.assertEqual(lines[-1], "SUMMARY: 23 passed, 0 failed")


class LawTests(SimpleTestCase):

    def setUp(self):
        self.source = SampleSource(seed=0, samples=200, grid=10, mode=TransformMode.STANDARD)

    def test_each_law_has_its_own_generator(self):
        a = self.source.unit_pairs('frank_equation', 'min_max')
        b = self.source.unit_pairs('frank_equation', 'product_probsum')
        self.assertNotEqual(a, b)
        self.assertEqual(a, self.source.unit_pairs('frank_equation', 'min_max'))

    def test_negative_seed_is_accepted(self):
        source = SampleSource(seed=-1, samples=5, grid=2, mode=TransformMode.STANDARD)
        self.assertEqual(len(source.unit_pairs('law', 'all')), 5)

    def test_idempotence_fails_for_product(self):
        result = law_idempotence(self.source, PRODUCT_PROBSUM)
        self.assertFalse(result.passed)
        self.assertIn("x|x=", result.counterexample)

    def test_cu_preservation_fails_for_product(self):
        result = law_cu_preservation(self.source, PRODUCT_PROBSUM)
        self.assertFalse(result.passed)

    def test_modularity_holds_for_product(self):
        result = law_modularity(self.source, PRODUCT_PROBSUM)
        self.assertTrue(result.passed)
        self.assertEqual(result.checked, 200)

    def test_union_monotonicity_holds_for_product(self):
        result = law_union_monotonicity(self.source, PRODUCT_PROBSUM)
        self.assertTrue(result.passed, result.counterexample)
        self.assertTrue(law_closure(self.source, PRODUCT_PROBSUM).passed)

    def test_transform_continuity_checks_every_edge(self):
        result = law_transform_continuity(self.source)
        self.assertTrue(result.passed, result.counterexample)
        self.assertEqual(result.checked, 2 * 2 * 10 * 11)

    def test_truth_tables_count_every_cell(self):
        result = law_truth_tables(self.source, PRODUCT_PROBSUM)
        self.assertTrue(result.passed)
        self.assertEqual(result.checked, 115)


@override_settings(BIFUZZY_VERIFY_GRID=10)
class VerifyCommandTests(SimpleTestCase):

    def call(self, **options):
        out = StringIO()
        call_command('verify', stdout=out, **options)
        return out.getvalue()

    def test_default_run(self):
        text = self.call(samples=100)
        self.assertIn("SUMMARY: 23 passed, 0 failed", text)
        self.assertNotIn("FAIL", text)

    def test_failures_exit_with_three(self):
        out = StringIO()
        with self.assertRaises(CommandError) as cm:
            call_command('verify', samples=100, couples='product', stdout=out)
        self.assertEqual(cm.exception.returncode, 3)
        text = out.getvalue()
        self.assertIn("PASS  product_probsum modularity", text)
        self.assertIn("FAIL  product_probsum idempotence", text)
        self.assertIn("    counterexample: ", text)

    def test_reports_are_reproducible(self):
        first = self.call(samples=100, seed=42)
        self.assertEqual(first, self.call(samples=100, seed=42))

    def test_json(self):
        data = json.loads(self.call(samples=50, as_json=True))
        self.assertTrue(data['passed'])
        self.assertEqual(data['results'][0]['law'], 'partition_of_unity')

    def test_unknown_couple(self):
        with self.assertRaises(CommandError) as cm:
            self.call(couples='drastic')
        self.assertEqual(cm.exception.returncode, 2)
