# core/utils.py

import logging

from django.conf import settings
from django.core.management.base import CommandError
from rest_framework.renderers import JSONRenderer

from .exceptions import BifuzzyError, DomainError, UsageError, VerificationFailed

logger = logging.getLogger(__name__)

EXIT_DOMAIN_ERROR = 1
EXIT_USAGE_ERROR = 2
EXIT_VERIFICATION_FAILED = 3


def command_exception_handler(exc):
    """
    Gestionnaire d'exceptions pour standardiser les codes de sortie des commandes :
    1 pour une erreur de domaine, 2 pour une erreur d'usage, 3 pour un échec de vérification.
    """
    if isinstance(exc, CommandError):
        return exc
    if isinstance(exc, UsageError):
        return CommandError(str(exc), returncode=EXIT_USAGE_ERROR)
    if isinstance(exc, VerificationFailed):
        return CommandError(str(exc), returncode=EXIT_VERIFICATION_FAILED)
    if isinstance(exc, (DomainError, OSError)):
        return CommandError(str(exc), returncode=EXIT_DOMAIN_ERROR)
    if isinstance(exc, BifuzzyError):
        logger.error(f"Erreur non prévue: {exc}")
        return CommandError(str(exc), returncode=EXIT_DOMAIN_ERROR)
    # Les autres exceptions remontent telles quelles
    return None


def output_digits():
    return getattr(settings, 'BIFUZZY_OUTPUT_DIGITS', 9)


def format_number(value, digits=None):
    """Nombre avec un nombre fixe de chiffres significatifs (zéro négatif normalisé)"""
    digits = digits or output_digits()
    return format(float(value) + 0.0, f".{digits}g")


def round_number(value, digits=None):
    """Même arrondi que format_number, pour les sorties JSON"""
    return float(format_number(value, digits))


def rounded(data, digits=None):
    """Arrondit récursivement les flottants d'une structure à sérialiser"""
    if isinstance(data, bool):
        return data
    if isinstance(data, float):
        return round_number(data, digits)
    if isinstance(data, dict):
        return {key: rounded(value, digits) for key, value in data.items()}
    if isinstance(data, (list, tuple)):
        return [rounded(value, digits) for value in data]
    return data


def render_json(data):
    """Document JSON unique, flottants arrondis, terminé par un saut de ligne"""
    return JSONRenderer().render(rounded(data)).decode('utf-8') + '\n'


def _render_scalar(value, digits=None):
    if isinstance(value, bool) or value is None:
        return str(value).lower()
    if isinstance(value, (int, float)):
        return format_number(value, digits)
    return str(value)


def render_record(data, digits=None):
    """
    Rendu texte « clé: valeur », une ligne par champ ; un sous-dictionnaire
    tient sur une ligne sous la forme « a=1 b=2 ».
    """
    lines = []
    for key, value in data.items():
        if isinstance(value, dict):
            value = ' '.join(f"{k}={_render_scalar(v, digits)}" for k, v in value.items())
        elif isinstance(value, (list, tuple)):
            value = '(' + ', '.join(_render_scalar(v, digits) for v in value) + ')'
        else:
            value = _render_scalar(value, digits)
        lines.append(f"{key}: {value}")
    return '\n'.join(lines) + '\n'
