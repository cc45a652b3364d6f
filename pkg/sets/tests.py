import io
import json
import tempfile
from io import StringIO
from pathlib import Path

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase
from hypothesis import given, settings as hypothesis_settings, strategies as st

from core.exceptions import DomainError, SetFormatError, UsageError
from core.values import BifuzzyValue

from .bifuzzy_set import BifuzzySet
from .formats import (
    detect_format, dump_set, format_decimal, load_set, parse_csv, parse_json,
    serialize_csv, serialize_json,
)

unit = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)
labels = st.from_regex(r'[A-Za-z0-9_.-]{1,8}', fullmatch=True)
bifuzzy_sets = st.builds(
    lambda name, elements: BifuzzySet.from_mapping(name, elements),
    st.from_regex(r'[a-z_]{0,8}', fullmatch=True),
    st.dictionaries(labels, st.tuples(unit, unit), max_size=12),
)


class BifuzzySetTests(SimpleTestCase):

    def test_canonical_order(self):
        s = BifuzzySet(name='s', items=(('b', (0.1, 0.2)), ('B', (0.3, 0.4)), ('a', (0.5, 0.6))))
        self.assertEqual(s.labels(), ['B', 'a', 'b'])
        self.assertEqual(s.elements['a'], BifuzzyValue(0.5, 0.6))
        self.assertIn('b', s)
        self.assertEqual(len(s), 3)

    def test_duplicate_label(self):
        with self.assertRaisesMessage(DomainError, "duplicate label 'a'"):
            BifuzzySet(items=(('a', (0.1, 0.2)), ('a', (0.3, 0.4))))

    def test_invalid_label(self):
        with self.assertRaises(DomainError):
            BifuzzySet(items=(('a b', (0.1, 0.2)),))

    def test_values_are_validated(self):
        with self.assertRaises(DomainError):
            BifuzzySet(items=(('a', (0.1, 1.2)),))


class CsvFormatTests(SimpleTestCase):

    def parse(self, text):
        return parse_csv(io.StringIO(text), name='test')

    def test_parse(self):
        s = self.parse("label,mu,nu\nx,0.5,0.5\ny,0,0\n\n")
        self.assertEqual(s.labels(), ['x', 'y'])
        self.assertEqual(s.elements['y'], BifuzzyValue(0.0, 0.0))
        self.assertEqual(s.name, 'test')

    def test_missing_header(self):
        with self.assertRaisesMessage(SetFormatError, "missing header 'label,mu,nu', line 1"):
            self.parse("x,0.5,0.5\n")

    def test_wrong_field_count(self):
        with self.assertRaisesMessage(SetFormatError, "expected 3 fields, got 2, line 3"):
            self.parse("label,mu,nu\nx,0.5,0.5\ny,0.5\n")

    def test_out_of_range(self):
        with self.assertRaises(SetFormatError) as cm:
            self.parse("label,mu,nu\nx,1.5,0.5\n")
        self.assertEqual(str(cm.exception), "mu out of range, line 2")
        self.assertEqual(cm.exception.line, 2)

    def test_not_a_number(self):
        with self.assertRaisesMessage(SetFormatError, "nu is not a number, line 2"):
            self.parse("label,mu,nu\nx,0.5,high\n")

    def test_duplicate_label(self):
        with self.assertRaisesMessage(SetFormatError, "duplicate label 'x', line 3"):
            self.parse("label,mu,nu\nx,0.5,0.5\nx,0.1,0.1\n")

    def test_bad_label(self):
        with self.assertRaisesMessage(SetFormatError, "label: invalid label"):
            self.parse("label,mu,nu\nx y,0.5,0.5\n")

    def test_serialize(self):
        s = BifuzzySet(items=(('b', (1.0, 0.0)), ('a', (0.1, 0.25))))
        self.assertEqual(serialize_csv(s), "label,mu,nu\na,0.1,0.25\nb,1,0\n")

    def test_name_is_not_stored(self):
        s = BifuzzySet(name='kept', items=(('a', (0.5, 0.5)),))
        self.assertEqual(parse_csv(io.StringIO(serialize_csv(s))).name, '')
        self.assertEqual(parse_csv(io.StringIO(serialize_csv(s)), name=s.name), s)

    def test_format_decimal(self):
        self.assertEqual(format_decimal(1.0), '1')
        self.assertEqual(format_decimal(0.1), '0.1')
        self.assertEqual(format_decimal(1 / 3), '0.3333333333333333')


class JsonFormatTests(SimpleTestCase):

    def parse(self, text):
        return parse_json(io.StringIO(text))

    def test_parse(self):
        s = self.parse('{"name": "s", "elements": {"b": {"mu": 1, "nu": 0}, "a": {"mu": 0.5, "nu": 0.5}}}')
        self.assertEqual(s.name, 's')
        self.assertEqual(s.labels(), ['a', 'b'])
        self.assertEqual(s.elements['b'], BifuzzyValue(1.0, 0.0))

    def test_duplicate_keys(self):
        with self.assertRaisesMessage(SetFormatError, "duplicate key 'a'"):
            self.parse('{"name": "s", "elements": {"a": {"mu": 1, "nu": 0}, "a": {"mu": 0, "nu": 0}}}')

    def test_non_finite_constants(self):
        with self.assertRaises(SetFormatError):
            self.parse('{"name": "s", "elements": {"a": {"mu": NaN, "nu": 0}}}')

    def test_strings_are_not_numbers(self):
        with self.assertRaisesMessage(SetFormatError, "mu is not a number"):
            self.parse('{"name": "s", "elements": {"a": {"mu": "0.5", "nu": 0}}}')

    def test_structure_errors(self):
        with self.assertRaises(SetFormatError):
            self.parse('[1, 2]')
        with self.assertRaisesMessage(SetFormatError, "elements"):
            self.parse('{"name": "s"}')
        with self.assertRaises(SetFormatError):
            self.parse('{"name": "s", "elements": {"a b": {"mu": 0, "nu": 0}}}')
        with self.assertRaises(SetFormatError):
            self.parse('{"name": "s", "elements": ')
        for name in ('5', '0.5', 'true', 'null', '["s"]'):
            with self.subTest(name=name):
                with self.assertRaises(SetFormatError):
                    self.parse('{"name": ' + name + ', "elements": {}}')
        with self.assertRaisesMessage(SetFormatError, "name: must be a string"):
            self.parse('{"name": 5, "elements": {}}')

    def test_serialized_values_are_exact(self):
        s = BifuzzySet(name='s', items=(('a', (1 / 3, 0.1)),))
        data = json.loads(serialize_json(s))
        self.assertEqual(data, {'name': 's', 'elements': {'a': {'mu': 1 / 3, 'nu': 0.1}}})


class RoundTripTests(SimpleTestCase):

    @hypothesis_settings(max_examples=100)
    @given(bifuzzy_sets)
    def test_csv(self, s):
        text = serialize_csv(s)
        back = parse_csv(io.StringIO(text), name=s.name)
        self.assertEqual(back, s)
        self.assertEqual(serialize_csv(back), text)

    @hypothesis_settings(max_examples=100)
    @given(bifuzzy_sets)
    def test_json(self, s):
        text = serialize_json(s)
        back = parse_json(io.StringIO(text))
        self.assertEqual(back, s)
        self.assertEqual(serialize_json(back), text)


class FileTests(SimpleTestCase):

    def setUp(self):
        directory = tempfile.TemporaryDirectory()
        self.addCleanup(directory.cleanup)
        self.root = Path(directory.name)

    def write(self, name, text):
        path = self.root / name
        path.write_text(text, encoding='utf-8')
        return str(path)

    def test_detect_format(self):
        self.assertEqual(detect_format('a/b.CSV'), 'csv')
        self.assertEqual(detect_format('b.json'), 'json')
        with self.assertRaises(UsageError):
            detect_format('b.xml')

    def test_load_and_dump(self):
        path = self.write('points.csv', "label,mu,nu\nx,0.5,0.5\n")
        s = load_set(path)
        self.assertEqual(s.name, 'points')
        target = self.root / 'points.json'
        dump_set(s, target)
        self.assertEqual(load_set(target), s)

    def test_invalid_encoding(self):
        path = self.root / 'latin.csv'
        path.write_bytes("label,mu,nu\nété,0.5,0.5\n".encode('latin-1'))
        with self.assertRaisesMessage(SetFormatError, "is not UTF-8 text"):
            load_set(path)


class SetCommandTests(SimpleTestCase):

    def setUp(self):
        directory = tempfile.TemporaryDirectory()
        self.addCleanup(directory.cleanup)
        self.root = Path(directory.name)
        self.example = self.write('example.csv', "label,mu,nu\nx,0.5,0.5\ny,0,0\n")
        self.crisp = self.write('crisp.csv', "label,mu,nu\na,1,0\nb,0,1\n")

    def write(self, name, text):
        path = self.root / name
        path.write_text(text, encoding='utf-8')
        return str(path)

    def call(self, *args, **options):
        out = StringIO()
        call_command('set', *args, stdout=out, **options)
        return out.getvalue()

    def assertExitCode(self, code, *args, **options):
        with self.assertRaises(CommandError) as cm:
            self.call(*args, **options)
        self.assertEqual(cm.exception.returncode, code)

    def test_entropy(self):
        lines = self.call('entropy', self.example).splitlines()
        self.assertIn("entropy: 2", lines)
        self.assertIn("vector: c=0 u=1 i=1", lines)
        self.assertIn("mean: 1", lines)

    def test_syntropy(self):
        lines = self.call('syntropy', self.crisp).splitlines()
        self.assertIn("syntropy: 2", lines)
        self.assertIn("vector: t=1 f=1", lines)

    def test_similarity_with_itself(self):
        self.assertIn("similarity: 1", self.call('similarity', self.example, self.example).splitlines())

    def test_universe_mismatch(self):
        self.assertExitCode(1, 'similarity', self.example, self.crisp)

    def test_describe(self):
        data = json.loads(self.call('describe', self.example, as_json=True))
        self.assertEqual([record['label'] for record in data['elements']], ['x', 'y'])
        self.assertEqual(data['elements'][0]['class'], 'fuzzy')
        text = self.call('describe', self.example)
        self.assertTrue(text.startswith("x: mu=0.5 nu=0.5 tau=0 delta=0 "))

    def test_convert(self):
        target = str(self.root / 'example.json')
        self.call('convert', self.example, output=target)
        self.assertEqual(load_set(target), load_set(self.example))

    def test_usage_errors(self):
        self.assertExitCode(2, 'entropy', self.example, self.crisp)
        self.assertExitCode(2, 'convert', self.example)
        self.assertExitCode(2, 'merge', self.example)
        self.assertExitCode(2, 'entropy', str(self.root / 'example.txt'))

    def test_file_errors(self):
        self.assertExitCode(1, 'entropy', str(self.root / 'missing.csv'))
        broken = self.write('broken.csv', "label,mu,nu\nx,2,0\n")
        self.assertExitCode(1, 'entropy', broken)
