# core/serializers.py

from rest_framework import serializers


# Champs de base
class UnitIntervalField(serializers.FloatField):
    """
    Degré de [0,1]. Aucune valeur n'est ramenée dans l'intervalle ; en mode
    strict (JSON) seuls les nombres sont acceptés, pas les chaînes.
    """
    default_error_messages = {
        'invalid': '{name} is not a number',
        'out_of_range': '{name} out of range',
    }

    def __init__(self, strict=False, **kwargs):
        self.strict = strict
        super().__init__(**kwargs)

    def to_internal_value(self, data):
        if isinstance(data, bool) or (self.strict and not isinstance(data, (int, float))):
            self.fail('invalid', name=self.field_name)
        try:
            value = float(data)
        except (TypeError, ValueError):
            self.fail('invalid', name=self.field_name)
        # NaN et infinis échouent aussi à cette comparaison
        if not 0.0 <= value <= 1.0:
            self.fail('out_of_range', name=self.field_name)
        return value


class BifuzzyValueSerializer(serializers.Serializer):
    mu = UnitIntervalField(strict=True)
    nu = UnitIntervalField(strict=True)

    def to_representation(self, instance):
        return {'mu': instance.mu, 'nu': instance.nu}


class ClassificationSerializer(serializers.Serializer):
    kind = serializers.CharField(source='kind.value', read_only=True)
    index = serializers.FloatField(read_only=True)


class TauDeltaSerializer(serializers.Serializer):
    tau = serializers.FloatField(read_only=True)
    delta = serializers.FloatField(read_only=True)
    mode = serializers.CharField(source='mode.value', read_only=True)
