# core/commands.py

import logging

from django.conf import settings
from django.core.management.base import BaseCommand

from .exceptions import UsageError
from .utils import command_exception_handler, render_json
from .values import BifuzzyValue, check_unit, parse_mode

logger = logging.getLogger(__name__)


class BifuzzyCommand(BaseCommand):
    """
    Base des commandes du projet : option --json commune, conversion des
    exceptions du domaine en codes de sortie.
    """
    requires_system_checks = []
    requires_migrations_checks = False

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super().create_parser(prog_name, subcommand, **kwargs)
        parser.add_argument(
            '--json', action='store_true', dest='as_json',
            help="Emit a single JSON document instead of text",
        )
        return parser

    def add_mode_argument(self, parser):
        parser.add_argument(
            '--mode', default=None,
            help="Transform mode: standard or balanced (default from settings)",
        )

    def get_mode(self, options):
        return parse_mode(options.get('mode') or getattr(settings, 'BIFUZZY_DEFAULT_MODE', 'standard'))

    def execute(self, *args, **options):
        try:
            return super().execute(*args, **options)
        except Exception as exc:
            error = command_exception_handler(exc)
            if error is None or error is exc:
                raise
            logger.debug(f"Commande interrompue (code {error.returncode}): {exc}")
            raise error from exc

    def emit(self, options, payload, text):
        """Écrit soit le texte, soit le document JSON équivalent"""
        if options.get('as_json'):
            self.stdout.write(render_json(payload), ending='')
        else:
            self.stdout.write(text)


def parse_degree(name, raw):
    """Lit un degré depuis la ligne de commande : nombre invalide = erreur d'usage"""
    try:
        value = float(raw)
    except (TypeError, ValueError):
        raise UsageError(f"{name} must be a number, got '{raw}'")
    return check_unit(name, value)


def parse_value(mu, nu):
    return BifuzzyValue(parse_degree('mu', mu), parse_degree('nu', nu))
