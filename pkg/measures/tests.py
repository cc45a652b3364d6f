import json
import math
from io import StringIO

import numpy as np
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase
from hypothesis import given, strategies as st

from core.exceptions import UniverseMismatchError
from core.values import BifuzzyValue, TransformMode
from penta.algebra import intersection, union
from penta.norms import LUKASIEWICZ, MIN_MAX, PRODUCT_PROBSUM, NormCouple
from penta.representation import PentaValue, to_penta
from sets.bifuzzy_set import BifuzzySet

from .scalar import (
    EntropyVector, SyntropyVector, entropy, entropy_closed_form_balanced, entropy_via_similarity,
    similarity, syntropy, syntropy_closed_form_balanced,
)
from .serializers import TransformRecordSerializer, transform_record
from .sets import (
    set_entropy, set_mean_entropy, set_mean_syntropy, set_profile, set_similarity, set_syntropy,
)

unit = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)
values = st.builds(BifuzzyValue, unit, unit)
modes = st.sampled_from(list(TransformMode))
pentas = st.builds(to_penta, values, modes)
couples = st.sampled_from([
    MIN_MAX, PRODUCT_PROBSUM, LUKASIEWICZ, NormCouple.frank(0.5), NormCouple.frank(10),
])


def grid(n=200):
    axis = np.arange(n + 1) / n
    return [BifuzzyValue(float(mu), float(nu)) for mu in axis for nu in axis]


class EntropyTests(SimpleTestCase):

    def test_same_entropy_different_nature(self):
        total, vector = entropy(to_penta(BifuzzyValue(0.5, 0.5)))
        self.assertAlmostEqual(total, 1.0, delta=1e-12)
        self.assertEqual(vector, EntropyVector(0.0, 0.0, 1.0))

        total, vector = entropy(to_penta(BifuzzyValue(0.0, 0.0)))
        self.assertAlmostEqual(total, 1.0, delta=1e-12)
        self.assertEqual(vector, EntropyVector(0.0, 1.0, 0.0))

    def test_crisp_true_has_full_syntropy(self):
        total, vector = syntropy(to_penta(BifuzzyValue(1.0, 0.0)))
        self.assertEqual(total, 1.0)
        self.assertEqual(vector, SyntropyVector(1.0, 0.0))
        self.assertEqual(entropy(to_penta(BifuzzyValue(1.0, 0.0)))[0], 0.0)

    def test_balanced_closed_forms_on_grid(self):
        for v in grid():
            p = to_penta(v, TransformMode.BALANCED)
            self.assertAlmostEqual(entropy(p)[0], entropy_closed_form_balanced(v), delta=1e-12)
            self.assertAlmostEqual(syntropy(p)[0], syntropy_closed_form_balanced(v), delta=1e-12)

    def test_standard_entropy_on_grid(self):
        for v in grid():
            self.assertAlmostEqual(entropy(to_penta(v))[0], 1.0 - abs(v.mu - v.nu), delta=1e-12)

    def test_balanced_example(self):
        p = to_penta(BifuzzyValue(0.8, 0.1), TransformMode.BALANCED)
        self.assertAlmostEqual(entropy(p)[0], 0.3 / 0.93, delta=1e-12)

    def test_entropy_is_maximal_on_the_diagonal(self):
        for mode in TransformMode:
            for k in range(11):
                v = BifuzzyValue(k / 10, k / 10)
                self.assertAlmostEqual(entropy(to_penta(v, mode))[0], 1.0, delta=1e-12)

    def test_similarity_route_gap_for_hand_built_vectors(self):
        x = PentaValue(t=0.25, f=0.25)
        self.assertAlmostEqual(entropy(x)[0], 0.5, delta=1e-12)
        self.assertAlmostEqual(entropy_via_similarity(x), 0.5 + 2 * math.sqrt(0.25 * 0.25), delta=1e-12)

    def test_similarity_of_opposites(self):
        self.assertEqual(similarity(to_penta(BifuzzyValue(1.0, 0.0)), to_penta(BifuzzyValue(0.0, 1.0))), 0.0)
        for mode in TransformMode:
            self.assertEqual(
                similarity(to_penta(BifuzzyValue(0.5, 0.5), mode), to_penta(BifuzzyValue(0.0, 0.0), mode)), 0.0
            )

    def test_vector_totals(self):
        self.assertAlmostEqual(EntropyVector(0.1, 0.2, 0.3).total, 0.6, delta=1e-12)
        self.assertAlmostEqual(SyntropyVector(0.4, 0.0).total, 0.4, delta=1e-12)


class MeasurePropertyTests(SimpleTestCase):

    @given(pentas)
    def test_entropy_and_syntropy_sum_to_one(self, x):
        self.assertAlmostEqual(entropy(x)[0] + syntropy(x)[0], 1.0, delta=1e-12)

    @given(pentas)
    def test_similarity_route_agrees(self, x):
        self.assertAlmostEqual(entropy_via_similarity(x), entropy(x)[0], delta=1e-12)

    @given(pentas, pentas)
    def test_similarity_is_bounded_and_symmetric(self, x, y):
        s = similarity(x, y)
        self.assertGreaterEqual(s, 0.0)
        self.assertLessEqual(s, 1.0 + 1e-12)
        self.assertAlmostEqual(s, similarity(y, x), delta=1e-15)

    @given(pentas)
    def test_self_similarity(self, x):
        self.assertAlmostEqual(similarity(x, x), 1.0, delta=1e-12)

    @given(couples, pentas, pentas)
    def test_modularity(self, couple, x, y):
        joined, met = union(x, y, couple), intersection(x, y, couple)
        self.assertAlmostEqual(
            entropy(joined)[0] + entropy(met)[0], entropy(x)[0] + entropy(y)[0], delta=1e-9
        )
        self.assertAlmostEqual(
            syntropy(joined)[0] + syntropy(met)[0], syntropy(x)[0] + syntropy(y)[0], delta=1e-9
        )


class SetMeasureTests(SimpleTestCase):

    def test_entropy_of_example_points(self):
        s = BifuzzySet(name='example', items=(('x', (0.5, 0.5)), ('y', (0.0, 0.0))))
        total, vector = set_entropy(s)
        self.assertAlmostEqual(total, 2.0, delta=1e-12)
        self.assertEqual(vector, EntropyVector(0.0, 1.0, 1.0))
        self.assertAlmostEqual(set_mean_entropy(s), 1.0, delta=1e-12)

    def test_syntropy_of_crisp_points(self):
        s = BifuzzySet(items=(('a', (1.0, 0.0)), ('b', (0.0, 1.0))))
        total, vector = set_syntropy(s)
        self.assertEqual(total, 2.0)
        self.assertEqual(vector, SyntropyVector(1.0, 1.0))
        self.assertEqual(set_mean_syntropy(s), 1.0)

    def test_empty_set(self):
        empty = BifuzzySet()
        self.assertEqual(set_entropy(empty)[0], 0.0)
        self.assertEqual(set_mean_entropy(empty), 0.0)
        self.assertEqual(set_similarity(empty, BifuzzySet()), 1.0)

    def test_similarity_with_itself(self):
        s = BifuzzySet(items=(('a', (0.3, 0.9)), ('b', (0.6, 0.1))))
        for mode in TransformMode:
            self.assertAlmostEqual(set_similarity(s, s, mode), 1.0, delta=1e-12)

    def test_similarity_examples(self):
        true, false = BifuzzySet(items=(('a', (1.0, 0.0)),)), BifuzzySet(items=(('a', (0.0, 1.0)),))
        self.assertEqual(set_similarity(true, false), 0.0)
        s1 = BifuzzySet(items=(('a', (1.0, 0.0)), ('b', (1.0, 0.0))))
        s2 = BifuzzySet(items=(('a', (1.0, 0.0)), ('b', (0.0, 1.0))))
        self.assertAlmostEqual(set_similarity(s1, s2), 0.5, delta=1e-12)

    def test_universe_mismatch(self):
        s1 = BifuzzySet(items=(('a', (0.3, 0.9)), ('b', (0.6, 0.1))))
        s2 = BifuzzySet(items=(('a', (0.3, 0.9)), ('c', (0.6, 0.1))))
        with self.assertRaises(UniverseMismatchError) as cm:
            set_similarity(s1, s2)
        self.assertEqual((cm.exception.missing, cm.exception.extra), (['b'], ['c']))

    def test_profile(self):
        s = BifuzzySet(items=(('b', (0.7, 0.2)), ('a', (1.0, 1.0))))
        profile = set_profile(s)
        self.assertEqual([record['label'] for record in profile], ['a', 'b'])
        self.assertEqual(profile[0]['class'], 'paraconsistent')
        self.assertEqual(profile[0]['c'], 1.0)
        self.assertAlmostEqual(profile[1]['i'], 0.4, delta=1e-12)
        self.assertAlmostEqual(profile[1]['entropy'], 0.5, delta=1e-12)


class TransformRecordTests(SimpleTestCase):

    def test_record_fields(self):
        data = TransformRecordSerializer(
            transform_record(BifuzzyValue(0.7, 0.2), TransformMode.STANDARD)
        ).data
        self.assertEqual(data['coordinates']['mode'], 'standard')
        self.assertAlmostEqual(data['coordinates']['tau'], 0.5, delta=1e-12)
        self.assertAlmostEqual(data['penta']['u'], 0.1, delta=1e-12)
        self.assertEqual(data['classification']['kind'], 'intuitionistic')
        self.assertAlmostEqual(data['entropy'], 0.5, delta=1e-12)
        self.assertAlmostEqual(data['syntropy_vector']['t'], 0.5, delta=1e-12)


class MeasureCommandTests(SimpleTestCase):

    def call(self, name, *args, **options):
        out = StringIO()
        call_command(name, *args, stdout=out, **options)
        return out.getvalue()

    def assertExitCode(self, code, name, *args, **options):
        with self.assertRaises(CommandError) as cm:
            self.call(name, *args, **options)
        self.assertEqual(cm.exception.returncode, code)
        return cm.exception

    def test_transform_ambiguous_point(self):
        lines = self.call('transform', '0.5', '0.5').splitlines()
        self.assertIn("penta: t=0 f=0 c=0 u=0 i=1", lines)
        self.assertIn("entropy: 1", lines)

    def test_transform_crisp_true(self):
        self.assertIn("syntropy: 1", self.call('transform', '1', '0').splitlines())

    def test_transform_json(self):
        data = json.loads(self.call('transform', '0.7', '0.2', mode='standard', as_json=True))
        self.assertEqual(data['penta'], {'t': 0.5, 'f': 0.0, 'c': 0.0, 'u': 0.1, 'i': 0.4})

    def test_transform_errors(self):
        error = self.assertExitCode(1, 'transform', '1.5', '0')
        self.assertIn("mu out of range", str(error))
        self.assertExitCode(2, 'transform', 'abc', '0')
        self.assertExitCode(2, 'transform', '0.5', '0.5', mode='symmetric')

    def test_measure_kinds(self):
        self.assertIn("value: 1", self.call('measure', 'entropy', '0.5', '0.5').splitlines())
        self.assertIn("value: 1", self.call('measure', 'similarity', '0.3', '0.6', '0.3', '0.6').splitlines())
        data = json.loads(self.call('measure', 'distance', '0.8', '0.1', as_json=True))
        self.assertAlmostEqual(data['value'], 0.677419355, delta=1e-9)

    def test_measure_errors(self):
        self.assertExitCode(2, 'measure', 'entropy', '0.5')
        self.assertExitCode(2, 'measure', 'similarity', '0.5', '0.5')
        self.assertExitCode(2, 'measure', 'chaos', '0.5', '0.5')
        self.assertExitCode(1, 'measure', 'entropy', '0.5', '2')

    def test_map_grid(self):
        lines = self.call('map', measure='entropy', resolution=2).splitlines()
        self.assertEqual(lines[0], 'mu,nu,value')
        self.assertEqual(len(lines), 1 + 9)
        self.assertEqual(lines[1:4], ['0,0,1', '0,0.5,0.5', '0,1,0'])
        self.assertIn('0.5,0.5,1', lines)
        self.assertIn('1,0,0', lines)

    def test_map_balanced(self):
        lines = self.call('map', measure='entropy', mode='balanced', resolution=10).splitlines()
        self.assertIn('0.8,0.1,0.322580645', lines)
        self.assertIn('0.5,0.5,1', lines)

    def test_map_other_measures(self):
        lines = self.call('map', measure='ambiguity', resolution=2).splitlines()
        self.assertIn('0.5,0.5,1', lines)
        lines = self.call('map', measure='incompleteness', resolution=4).splitlines()
        self.assertIn('0,0,1', lines)

    def test_map_is_deterministic(self):
        first = self.call('map', measure='syntropy', resolution=20)
        self.assertEqual(first, self.call('map', measure='syntropy', resolution=20))

    def test_map_errors(self):
        self.assertExitCode(2, 'map', resolution=1)
        self.assertExitCode(2, 'map', measure='temperature')
