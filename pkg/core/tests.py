import json
import math

import numpy as np
from django.core.management.base import CommandError
from django.test import SimpleTestCase
from hypothesis import given, strategies as st

from .exceptions import (
    DomainError, SetFormatError, UniverseMismatchError, UsageError, VerificationFailed,
)
from .serializers import BifuzzyValueSerializer, UnitIntervalField
from .utils import (
    EXIT_DOMAIN_ERROR, EXIT_USAGE_ERROR, EXIT_VERIFICATION_FAILED,
    command_exception_handler, format_number, render_json, render_record,
)
from .values import (
    BifuzzyValue, ClassKind, TauDelta, TransformMode, check_unit, classify, complement,
    distance_d, distance_d_complementary, invert_standard, parse_mode, tau_delta,
    tau_delta_balanced, tau_delta_standard,
)

unit = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)
values = st.builds(BifuzzyValue, unit, unit)


def grid(n=200):
    axis = np.arange(n + 1) / n
    return [BifuzzyValue(float(mu), float(nu)) for mu in axis for nu in axis]


class BifuzzyValueTests(SimpleTestCase):

    def test_valid_value(self):
        v = BifuzzyValue(0.7, 0.2)
        self.assertEqual((v.mu, v.nu), (0.7, 0.2))
        self.assertEqual(list(v), [0.7, 0.2])

    def test_out_of_range_is_rejected(self):
        with self.assertRaisesMessage(DomainError, "mu out of range"):
            BifuzzyValue(1.5, 0.0)
        with self.assertRaisesMessage(DomainError, "nu out of range"):
            BifuzzyValue(0.0, -0.1)

    def test_nan_and_booleans_are_rejected(self):
        with self.assertRaises(DomainError):
            BifuzzyValue(float('nan'), 0.5)
        with self.assertRaises(DomainError):
            check_unit('mu', True)
        with self.assertRaisesMessage(DomainError, "mu must be a number"):
            check_unit('mu', 'abc')

    def test_bounds_are_kept_exactly(self):
        self.assertEqual(check_unit('mu', 0), 0.0)
        self.assertEqual(check_unit('mu', 1), 1.0)

    def test_parse_mode(self):
        self.assertIs(parse_mode('Balanced'), TransformMode.BALANCED)
        self.assertIs(parse_mode(TransformMode.STANDARD), TransformMode.STANDARD)
        with self.assertRaises(UsageError):
            parse_mode('symmetric')


class TransformTests(SimpleTestCase):

    def test_standard_coordinates(self):
        td = tau_delta_standard(BifuzzyValue(0.7, 0.2))
        self.assertAlmostEqual(td.tau, 0.5, delta=1e-12)
        self.assertAlmostEqual(td.delta, -0.1, delta=1e-12)
        self.assertIs(td.mode, TransformMode.STANDARD)

    def test_balanced_coordinates(self):
        # a = 0.7, b = 0.1, 1 - ab = 0.93
        td = tau_delta_balanced(BifuzzyValue(0.8, 0.1))
        self.assertAlmostEqual(td.tau, 0.9 * 0.7 / 0.93, delta=1e-12)
        self.assertAlmostEqual(td.delta, -0.3 * 0.1 / 0.93, delta=1e-12)
        self.assertIs(tau_delta(BifuzzyValue(0.8, 0.1), 'balanced').mode, TransformMode.BALANCED)

    def test_corners(self):
        self.assertEqual(tau_delta_standard(BifuzzyValue(1, 0)), TauDelta(1.0, 0.0))
        self.assertEqual(tau_delta_standard(BifuzzyValue(0, 1)), TauDelta(-1.0, 0.0))
        self.assertEqual(tau_delta_standard(BifuzzyValue(1, 1)), TauDelta(0.0, 1.0))
        self.assertEqual(tau_delta_standard(BifuzzyValue(0, 0)), TauDelta(0.0, -1.0))

    def test_distance_identity_on_grid(self):
        for v in grid():
            a, b = abs(v.mu - v.nu), abs(v.mu + v.nu - 1.0)
            self.assertAlmostEqual(
                a + b, max(abs(2 * v.mu - 1), abs(2 * v.nu - 1)), delta=1e-12
            )

    def test_inverse_refuses_balanced(self):
        with self.assertRaises(DomainError):
            invert_standard(TauDelta(0.1, 0.1, TransformMode.BALANCED))

    def test_inverse_snaps_rounding_noise(self):
        v = invert_standard(TauDelta(1.0 + 1e-15, 0.0))
        self.assertEqual(v.mu, 1.0)

    def test_distance_d(self):
        v = BifuzzyValue(0.8, 0.1)
        self.assertAlmostEqual(distance_d(v), 0.7 * 0.9 / 0.93, delta=1e-12)
        self.assertAlmostEqual(distance_d_complementary(v), 0.3 * 0.1 / 0.93, delta=1e-12)
        self.assertEqual(distance_d(BifuzzyValue(0.5, 0.5)), 0.0)

    def test_balanced_signs_on_grid(self):
        for v in grid():
            td = tau_delta_balanced(v)
            with self.subTest(mu=v.mu, nu=v.nu):
                self.assertEqual(np.sign(td.tau), np.sign(v.mu - v.nu))
                self.assertEqual(np.sign(td.delta), np.sign(v.mu + v.nu - 1.0))

    def test_balanced_tau_is_standard_when_b_is_zero(self):
        checked = 0
        for v in grid():
            if abs(v.mu + v.nu - 1.0) <= 1e-15:
                checked += 1
                self.assertAlmostEqual(
                    tau_delta_balanced(v).tau, tau_delta_standard(v).tau, delta=1e-12
                )
        self.assertEqual(checked, 201)

    def test_distance_d_vanishes_only_on_the_diagonal(self):
        for v in grid():
            with self.subTest(mu=v.mu, nu=v.nu):
                self.assertEqual(distance_d(v) == 0.0, v.mu == v.nu)

    def test_classification(self):
        c = classify(BifuzzyValue(0.3, 0.4))
        self.assertIs(c.kind, ClassKind.INTUITIONISTIC)
        self.assertAlmostEqual(c.index, 0.3, delta=1e-12)
        self.assertIs(classify(BifuzzyValue(0.8, 0.5)).kind, ClassKind.PARACONSISTENT)
        self.assertIs(classify(BifuzzyValue(0.5, 0.5)).kind, ClassKind.FUZZY)
        self.assertIs(classify(BifuzzyValue(0.2, 0.8)).kind, ClassKind.FUZZY)

    def test_complement_swaps_degrees(self):
        self.assertEqual(complement(BifuzzyValue(0.9, 0.3)), BifuzzyValue(0.3, 0.9))


class TransformPropertyTests(SimpleTestCase):

    @given(values)
    def test_standard_round_trip(self, v):
        back = invert_standard(tau_delta_standard(v))
        self.assertAlmostEqual(back.mu, v.mu, delta=1e-12)
        self.assertAlmostEqual(back.nu, v.nu, delta=1e-12)

    @given(values)
    def test_balanced_coordinates_are_bounded(self, v):
        td = tau_delta_balanced(v)
        self.assertLessEqual(abs(td.tau) + abs(td.delta), 1.0 + 1e-12)

    @given(values)
    def test_standard_coordinates_are_bounded(self, v):
        td = tau_delta_standard(v)
        self.assertLessEqual(abs(td.tau) + abs(td.delta), 1.0 + 1e-12)

    @given(values)
    def test_distance_of_complement(self, v):
        # D(ν, μ) = D(μ, ν)
        self.assertAlmostEqual(distance_d(complement(v)), distance_d(v), delta=1e-12)


class UtilsTests(SimpleTestCase):

    def test_format_number(self):
        self.assertEqual(format_number(1 / 3), '0.333333333')
        self.assertEqual(format_number(-0.0), '0')
        self.assertEqual(format_number(1.0), '1')
        self.assertEqual(format_number(5), '5')

    def test_render_json_rounds_floats(self):
        text = render_json({'value': 1 / 3, 'count': 3, 'ok': True})
        self.assertTrue(text.endswith('\n'))
        self.assertEqual(json.loads(text), {'value': 0.333333333, 'count': 3, 'ok': True})

    def test_render_record(self):
        text = render_record({'mu': 0.5, 'vector': {'c': 0.0, 'u': 1.0}, 'pair': (1, 2), 'name': 'x'})
        self.assertEqual(text, "mu: 0.5\nvector: c=0 u=1\npair: (1, 2)\nname: x\n")

    def test_exit_codes(self):
        cases = [
            (UsageError('bad flag'), EXIT_USAGE_ERROR),
            (VerificationFailed('law failed'), EXIT_VERIFICATION_FAILED),
            (DomainError('mu out of range'), EXIT_DOMAIN_ERROR),
            (SetFormatError('bad row', line=3), EXIT_DOMAIN_ERROR),
            (FileNotFoundError('missing.csv'), EXIT_DOMAIN_ERROR),
        ]
        for exc, code in cases:
            with self.subTest(exc=exc):
                error = command_exception_handler(exc)
                self.assertIsInstance(error, CommandError)
                self.assertEqual(error.returncode, code)

    def test_unrelated_exceptions_are_left_alone(self):
        self.assertIsNone(command_exception_handler(KeyError('x')))

    def test_error_messages(self):
        self.assertEqual(str(SetFormatError('bad row', line=3)), 'bad row, line 3')
        self.assertEqual(
            str(UniverseMismatchError(['a'], ['b'])),
            'universe mismatch (missing: a; extra: b)',
        )


class SerializerTests(SimpleTestCase):

    def test_value_serializer(self):
        serializer = BifuzzyValueSerializer(data={'mu': 0.25, 'nu': 1})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.validated_data, {'mu': 0.25, 'nu': 1.0})

    def test_strict_field_rejects_strings(self):
        serializer = BifuzzyValueSerializer(data={'mu': '0.25', 'nu': 0.5})
        self.assertFalse(serializer.is_valid())
        self.assertEqual(str(serializer.errors['mu'][0]), 'mu is not a number')

    def test_out_of_range(self):
        serializer = BifuzzyValueSerializer(data={'mu': 0.5, 'nu': 1.5})
        self.assertFalse(serializer.is_valid())
        self.assertEqual(str(serializer.errors['nu'][0]), 'nu out of range')

    def test_lenient_field_accepts_text(self):
        field = UnitIntervalField()
        field.bind('mu', None)
        self.assertEqual(field.to_internal_value('0.125'), 0.125)
        self.assertTrue(math.isclose(field.to_internal_value('1e-3'), 0.001))
