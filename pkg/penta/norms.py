# penta/norms.py
"""
Couples de Frank (t-norme T, t-conorme S) utilisés par l'union et
l'intersection. S est toujours la duale de T : S(a,b) = 1 - T(1-a, 1-b),
et tout couple vérifie T(a,b) + S(a,b) = a + b.
"""
import enum
import math
import re
from dataclasses import dataclass

from core.exceptions import DomainError, UsageError


class CoupleKind(str, enum.Enum):
    MIN_MAX = 'min_max'
    PRODUCT_PROBSUM = 'product_probsum'
    LUKASIEWICZ = 'lukasiewicz'
    FRANK = 'frank'


ALIASES = {
    'min_max': CoupleKind.MIN_MAX,
    'min': CoupleKind.MIN_MAX,
    'minmax': CoupleKind.MIN_MAX,
    'product_probsum': CoupleKind.PRODUCT_PROBSUM,
    'product': CoupleKind.PRODUCT_PROBSUM,
    'lukasiewicz': CoupleKind.LUKASIEWICZ,
    'luk': CoupleKind.LUKASIEWICZ,
}

FRANK_PATTERN = re.compile(r'^frank(?:\((?P<paren>[^)]*)\)|:(?P<colon>.*))$')


def _format_parameter(s):
    # repr garde tous les chiffres : frank(1.000000001) ne devient pas frank(1)
    text = repr(s)
    return text[:-2] if text.endswith('.0') else text


def _log_expm1(x):
    """log(e^x - 1) pour x > 0, sans débordement quand x est grand."""
    return x + math.log(-math.expm1(-x))


def _frank_t_norm(s, a, b):
    """
    T_s(a,b) = log_s(1 + (s^a - 1)(s^b - 1) / (s - 1)).

    La forme directe déborde pour s > ~1e154 et perd toute précision près
    de s = 1. On passe par k = ln s et expm1 :
    - s > 1 : le quotient est calculé en logarithme puis log(1 + e^z) ;
    - 1/e <= s < 1 : le quotient reste dans (-1, 0], log1p suffit ;
    - s < 1/e : 1 + quotient = (s^a(1 - s^b) + s^b(1 - s^(1-b))) / (1 - s),
      somme de deux termes positifs, sans annulation quand s tend vers 0.
    """
    if a == 0.0 or b == 0.0:
        return 0.0
    if a == 1.0:
        return b
    if b == 1.0:
        return a
    k = math.log(s)
    if k > 0.0:
        x, y = a * k, b * k
        if x == 0.0 or y == 0.0:
            # sous-dépassement : T <= min(a, b) est déjà nul à la précision près
            return 0.0
        z = _log_expm1(x) + _log_expm1(y) - _log_expm1(k)
        if z > 0.0:
            return (z + math.log1p(math.exp(-z))) / k
        return math.log1p(math.exp(z)) / k
    if k >= -1.0:
        return math.log1p(math.expm1(a * k) * math.expm1(b * k) / math.expm1(k)) / k
    head = math.exp(a * k) * -math.expm1(b * k)
    tail = math.exp(b * k) * -math.expm1((1.0 - b) * k)
    return (math.log(head + tail) - math.log(-math.expm1(k))) / k


@dataclass(frozen=True)
class NormCouple:
    kind: CoupleKind = CoupleKind.MIN_MAX
    s: float = None

    def __post_init__(self):
        if self.kind is CoupleKind.FRANK:
            if self.s is None or isinstance(self.s, bool):
                raise DomainError("frank couple requires a parameter s")
            s = float(self.s)
            if not math.isfinite(s) or s <= 0.0 or s == 1.0:
                raise DomainError(f"frank parameter must be positive and != 1, got {self.s!r}")
            object.__setattr__(self, 's', s)
        elif self.s is not None:
            raise DomainError(f"{self.kind.value} takes no parameter")

    @classmethod
    def frank(cls, s):
        return cls(CoupleKind.FRANK, s)

    @property
    def name(self):
        if self.kind is CoupleKind.FRANK:
            return f"frank({_format_parameter(self.s)})"
        return self.kind.value

    def t_norm(self, a, b):
        if self.kind is CoupleKind.MIN_MAX:
            return min(a, b)
        if self.kind is CoupleKind.PRODUCT_PROBSUM:
            return a * b
        if self.kind is CoupleKind.LUKASIEWICZ:
            return max(a + b - 1.0, 0.0)
        return _frank_t_norm(self.s, a, b)

    def t_conorm(self, a, b):
        if self.kind is CoupleKind.MIN_MAX:
            return max(a, b)
        if self.kind is CoupleKind.PRODUCT_PROBSUM:
            return a + b - a * b
        if self.kind is CoupleKind.LUKASIEWICZ:
            return min(a + b, 1.0)
        return 1.0 - self.t_norm(1.0 - a, 1.0 - b)

    def __str__(self):
        return self.name


MIN_MAX = NormCouple(CoupleKind.MIN_MAX)
PRODUCT_PROBSUM = NormCouple(CoupleKind.PRODUCT_PROBSUM)
LUKASIEWICZ = NormCouple(CoupleKind.LUKASIEWICZ)


def t_norm(couple, a, b):
    return couple.t_norm(a, b)


def t_conorm(couple, a, b):
    return couple.t_conorm(a, b)


def parse_couple(text):
    """
    Convertit un nom de couple : min_max, product_probsum, lukasiewicz,
    leurs alias courts, frank(s) ou frank:s.
    """
    if isinstance(text, NormCouple):
        return text
    name = str(text).strip().lower()
    if name in ALIASES:
        return NormCouple(ALIASES[name])
    match = FRANK_PATTERN.match(name)
    if match:
        raw = match.group('paren') if match.group('paren') is not None else match.group('colon')
        try:
            return NormCouple.frank(float(raw))
        except (TypeError, ValueError) as exc:
            raise UsageError(f"invalid frank parameter in '{text}': {exc}")
    raise UsageError(f"unknown couple '{text}'")


def parse_couples(text):
    """Liste de couples séparés par des virgules (frank(s) compris)"""
    names = [part for part in re.split(r',(?![^(]*\))', str(text)) if part.strip()]
    if not names:
        raise UsageError("no couple given")
    return [parse_couple(name) for name in names]
