# sets/serializers.py
import codecs
import json

from django.conf import settings
from django.core.validators import RegexValidator
from rest_framework import serializers
from rest_framework.exceptions import ParseError
from rest_framework.parsers import JSONParser

from core.serializers import BifuzzyValueSerializer, UnitIntervalField
from core.values import BifuzzyValue

from .bifuzzy_set import LABEL_PATTERN, BifuzzySet


label_validator = RegexValidator(
    LABEL_PATTERN,
    message="invalid label (allowed characters: A-Z a-z 0-9 _ . -)",
)


# Serializers des valeurs
class BifuzzyElementSerializer(serializers.Serializer):
    """Une ligne CSV : label, mu, nu (valeurs encore sous forme de texte)"""
    label = serializers.CharField(validators=[label_validator], trim_whitespace=False)
    mu = UnitIntervalField()
    nu = UnitIntervalField()


# Serializers des ensembles
class StrictCharField(serializers.CharField):
    """CharField qui refuse les nombres au lieu de les convertir en texte"""
    default_error_messages = {
        'invalid': "must be a string",
    }

    def to_internal_value(self, data):
        if not isinstance(data, str):
            self.fail('invalid')
        return super().to_internal_value(data)


class BifuzzySetSerializer(serializers.Serializer):
    name = StrictCharField(allow_blank=True, trim_whitespace=False)
    elements = serializers.DictField(child=BifuzzyValueSerializer())

    def validate_elements(self, value):
        """Validation des étiquettes (les clés du dictionnaire)"""
        for label in value:
            label_validator(label)
        return value

    def create(self, validated_data):
        return BifuzzySet(
            name=validated_data['name'],
            items=tuple(
                (label, BifuzzyValue(element['mu'], element['nu']))
                for label, element in validated_data['elements'].items()
            ),
        )

    def to_representation(self, instance):
        return {
            'name': instance.name,
            'elements': {
                label: BifuzzyValueSerializer(value).data
                for label, value in instance.items
            },
        }


# Parseur
class StrictJSONParser(JSONParser):
    """
    JSONParser qui refuse en plus les clés dupliquées dans un objet
    (sinon la dernière occurrence gagnerait silencieusement).
    """

    def parse(self, stream, media_type=None, parser_context=None):
        parser_context = parser_context or {}
        encoding = parser_context.get('encoding', settings.DEFAULT_CHARSET)
        try:
            decoded_stream = codecs.getreader(encoding)(stream)
            return json.load(
                decoded_stream,
                object_pairs_hook=_reject_duplicate_keys,
                parse_constant=_reject_constant,
            )
        except ValueError as exc:
            raise ParseError(f"JSON parse error - {exc}")


def _reject_duplicate_keys(pairs):
    result = {}
    for key, value in pairs:
        if key in result:
            raise ValueError(f"duplicate key '{key}'")
        result[key] = value
    return result


def _reject_constant(token):
    raise ValueError(f"invalid constant {token}")
