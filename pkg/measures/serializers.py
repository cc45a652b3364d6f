# measures/serializers.py
from rest_framework import serializers

from core.serializers import ClassificationSerializer, TauDeltaSerializer
from core.values import classify, tau_delta
from penta.representation import penta_from_tau_delta

from .scalar import entropy, syntropy


# Serializers de base (lecture seule)
class PentaValueSerializer(serializers.Serializer):
    t = serializers.FloatField(read_only=True)
    f = serializers.FloatField(read_only=True)
    c = serializers.FloatField(read_only=True)
    u = serializers.FloatField(read_only=True)
    i = serializers.FloatField(read_only=True)


class EntropyVectorSerializer(serializers.Serializer):
    c = serializers.FloatField(read_only=True)
    u = serializers.FloatField(read_only=True)
    i = serializers.FloatField(read_only=True)


class SyntropyVectorSerializer(serializers.Serializer):
    t = serializers.FloatField(read_only=True)
    f = serializers.FloatField(read_only=True)


# Fiche complète d'une valeur
class TransformRecordSerializer(serializers.Serializer):
    mu = serializers.FloatField(read_only=True)
    nu = serializers.FloatField(read_only=True)
    coordinates = TauDeltaSerializer(read_only=True)
    penta = PentaValueSerializer(read_only=True)
    classification = ClassificationSerializer(read_only=True)
    entropy = serializers.FloatField(read_only=True)
    entropy_vector = EntropyVectorSerializer(read_only=True)
    syntropy = serializers.FloatField(read_only=True)
    syntropy_vector = SyntropyVectorSerializer(read_only=True)


def transform_record(v, mode):
    """Regroupe (τ,δ), les cinq indices, la classe et les mesures d'une valeur"""
    td = tau_delta(v, mode)
    penta = penta_from_tau_delta(td)
    e, e_vector = entropy(penta)
    gamma, gamma_vector = syntropy(penta)
    return {
        'mu': v.mu,
        'nu': v.nu,
        'coordinates': td,
        'penta': penta,
        'classification': classify(v),
        'entropy': e,
        'entropy_vector': e_vector,
        'syntropy': gamma,
        'syntropy_vector': gamma_vector,
    }
