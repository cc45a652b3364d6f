# sets/formats.py
"""
Lecture et écriture des ensembles bifloues en CSV (label,mu,nu) et en JSON
({"name": ..., "elements": {label: {"mu": ..., "nu": ...}}}).

Toute erreur de lecture lève SetFormatError, avec le numéro de ligne pour
le CSV.
"""
import csv
import io
import logging
from pathlib import Path

from rest_framework.exceptions import ParseError
from rest_framework.renderers import JSONRenderer

from core.exceptions import DomainError, SetFormatError, UsageError

from .bifuzzy_set import BifuzzySet
from .serializers import BifuzzyElementSerializer, BifuzzySetSerializer, StrictJSONParser

logger = logging.getLogger(__name__)

CSV_HEADER = ['label', 'mu', 'nu']


def format_decimal(value):
    """Écriture décimale la plus courte qui relit exactement la même valeur"""
    text = repr(float(value))
    return text[:-2] if text.endswith('.0') else text


def _first_error(detail):
    """Premier message d'une erreur DRF (dictionnaires et listes imbriqués)"""
    if isinstance(detail, dict):
        for key, value in detail.items():
            message = _first_error(value)
            # Les messages de mu et nu contiennent déjà le nom du champ
            if key in ('non_field_errors', 'mu', 'nu'):
                return message
            return f"{key}: {message}"
    if isinstance(detail, (list, tuple)):
        return _first_error(detail[0]) if detail else 'invalid'
    return str(detail)


# === CSV ===
def parse_csv(stream, name=''):
    """
    Lit un ensemble au format label,mu,nu.

    Le CSV ne porte pas le nom de l'ensemble : il vient de l'argument name
    (load_set passe le nom du fichier sans extension).
    """
    reader = csv.reader(stream)
    try:
        header = next(reader, None)
    except csv.Error as exc:
        raise SetFormatError(f"malformed CSV ({exc})", line=1)
    if header is None or [cell.strip() for cell in header] != CSV_HEADER:
        raise SetFormatError("missing header 'label,mu,nu'", line=1)

    items = []
    lines = {}
    try:
        for row in reader:
            line = reader.line_num
            if not row or (len(row) == 1 and not row[0].strip()):
                continue
            if len(row) != 3:
                raise SetFormatError(f"expected 3 fields, got {len(row)}", line=line)
            serializer = BifuzzyElementSerializer(data=dict(zip(CSV_HEADER, row)))
            if not serializer.is_valid():
                raise SetFormatError(_first_error(serializer.errors), line=line)
            data = serializer.validated_data
            if data['label'] in lines:
                raise SetFormatError(f"duplicate label '{data['label']}'", line=line)
            lines[data['label']] = line
            items.append((data['label'], (data['mu'], data['nu'])))
    except csv.Error as exc:
        raise SetFormatError(f"malformed CSV ({exc})", line=reader.line_num)

    logger.debug(f"CSV lu: {len(items)} élément(s)")
    return BifuzzySet(name=name, items=tuple(items))


def serialize_csv(s):
    """Écrit l'ensemble en CSV, trié par étiquette. Le nom (s.name) est perdu."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(CSV_HEADER)
    for label, value in s:
        writer.writerow([label, format_decimal(value.mu), format_decimal(value.nu)])
    return buffer.getvalue()


# === JSON ===
def parse_json(stream):
    raw = stream.read()
    if isinstance(raw, str):
        raw = raw.encode('utf-8')
    try:
        data = StrictJSONParser().parse(io.BytesIO(raw))
    except ParseError as exc:
        raise SetFormatError(str(exc.detail))
    if not isinstance(data, dict):
        raise SetFormatError("expected a JSON object with 'name' and 'elements'")
    serializer = BifuzzySetSerializer(data=data)
    if not serializer.is_valid():
        raise SetFormatError(_first_error(serializer.errors))
    try:
        return serializer.save()
    except DomainError as exc:
        raise SetFormatError(str(exc))


def serialize_json(s):
    # Pas d'arrondi ici : la relecture doit redonner exactement les mêmes valeurs
    data = BifuzzySetSerializer(s).data
    return JSONRenderer().render(data, renderer_context={'indent': 2}).decode('utf-8') + '\n'


# === Fichiers ===
READERS = {'.csv': 'csv', '.json': 'json'}


def detect_format(path):
    suffix = Path(path).suffix.lower()
    if suffix not in READERS:
        raise UsageError(f"unknown set format '{suffix or path}' (expected .csv or .json)")
    return READERS[suffix]


def load_set(path):
    path = Path(path)
    fmt = detect_format(path)
    logger.info(f"Lecture de l'ensemble {path}")
    try:
        with path.open('r', encoding='utf-8', newline='') as stream:
            if fmt == 'csv':
                return parse_csv(stream, name=path.stem)
            return parse_json(stream)
    except UnicodeDecodeError as exc:
        raise SetFormatError(f"{path.name} is not UTF-8 text ({exc.reason})")


def dump_set(s, path):
    path = Path(path)
    fmt = detect_format(path)
    text = serialize_csv(s) if fmt == 'csv' else serialize_json(s)
    with path.open('w', encoding='utf-8', newline='') as stream:
        stream.write(text)
    logger.info(f"Ensemble écrit dans {path} ({len(s)} élément(s))")
