# verification/services.py
import logging
from dataclasses import dataclass

from django.conf import settings

from core.exceptions import UsageError
from core.values import parse_mode
from penta.norms import parse_couples

from .laws import COUPLE_LAWS, GLOBAL_LAWS, SampleSource

# Configuration du logger
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class VerificationReport:
    seed: int
    samples: int
    mode: str
    couples: tuple
    results: tuple

    @property
    def passed(self):
        return all(result.passed for result in self.results)

    @property
    def failures(self):
        return [result for result in self.results if not result.passed]

    def render_text(self):
        width = max(len(f"{result.scope} {result.law}") for result in self.results)
        lines = [
            f"seed={self.seed} samples={self.samples} mode={self.mode} "
            f"couples={','.join(self.couples)}",
        ]
        for result in self.results:
            status = 'PASS' if result.passed else 'FAIL'
            label = f"{result.scope} {result.law}".ljust(width)
            lines.append(f"{status}  {label}  ({result.checked} checks)")
            if not result.passed:
                lines.append(f"    counterexample: {result.counterexample}")
        failed = len(self.failures)
        lines.append(f"SUMMARY: {len(self.results) - failed} passed, {failed} failed")
        return '\n'.join(lines) + '\n'

    def as_dict(self):
        return {
            'seed': self.seed,
            'samples': self.samples,
            'mode': self.mode,
            'couples': list(self.couples),
            'passed': self.passed,
            'results': [result.as_dict() for result in self.results],
        }


class VerificationService:
    """Exécute toutes les lois, dans un ordre fixe, avec une graine donnée"""

    def __init__(self, samples=None, seed=None, couples=None, mode=None, grid=None):
        self.samples = samples if samples is not None else getattr(settings, 'BIFUZZY_VERIFY_SAMPLES', 10000)
        self.seed = seed if seed is not None else getattr(settings, 'BIFUZZY_VERIFY_SEED', 0)
        self.grid = grid if grid is not None else getattr(settings, 'BIFUZZY_VERIFY_GRID', 200)
        self.mode = parse_mode(mode or getattr(settings, 'BIFUZZY_DEFAULT_MODE', 'standard'))
        self.couples = parse_couples(couples or getattr(settings, 'BIFUZZY_VERIFY_COUPLES', 'min_max'))

        # Validation de la configuration
        if self.samples < 1:
            raise UsageError(f"samples must be >= 1, got {self.samples}")
        if self.grid < 2:
            raise UsageError(f"grid resolution must be >= 2, got {self.grid}")
        if not -2 ** 63 <= self.seed < 2 ** 64:
            raise UsageError(f"seed must fit in 64 bits, got {self.seed}")

    def run(self):
        source = SampleSource(self.seed, self.samples, self.grid, self.mode)
        names = [couple.name for couple in self.couples]
        logger.info(
            f"Vérification: graine {self.seed}, {self.samples} tirages, couples {', '.join(names)}"
        )
        results = []
        for law in GLOBAL_LAWS:
            results.append(self._log(law(source)))
        for couple in self.couples:
            for law in COUPLE_LAWS:
                results.append(self._log(law(source, couple)))
        report = VerificationReport(
            seed=self.seed,
            samples=self.samples,
            mode=self.mode.value,
            couples=tuple(names),
            results=tuple(results),
        )
        logger.info(f"Vérification terminée: {len(report.failures)} échec(s)")
        return report

    def _log(self, result):
        if result.passed:
            logger.debug(f"{result.scope}/{result.law}: OK ({result.checked} cas)")
        else:
            logger.warning(f"{result.scope}/{result.law}: échec - {result.counterexample}")
        return result
