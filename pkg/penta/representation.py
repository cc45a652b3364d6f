# penta/representation.py
"""
Représentation à cinq valeurs : (μ,ν) -> (t, c, u, f) et l'ambiguïté dérivée
i = 1 - t - c - u - f.

L'ordre des composantes est (t, c, u, f), celui des formules des opérateurs.
"""
import math
from dataclasses import dataclass

from core.exceptions import AmbiguousPreimageError, DomainError
from core.values import TauDelta, TransformMode, invert_standard, tau_delta

# Bruit d'arrondi toléré sur les invariants (composantes >= 0, somme <= 1)
PENTA_TOLERANCE = 1e-12

# Tolérance de détection des vecteurs 0/1
CRISP_TOLERANCE = 1e-9

# Ordre des lignes et colonnes des tables de vérité
TABLE_ORDER = ('t', 'i', 'u', 'c', 'f')


@dataclass(frozen=True)
class PentaValue:
    """
    Vecteur (t, c, u, f) : indices de vérité, d'inconsistance,
    d'incomplétude et de fausseté. L'ambiguïté i n'est jamais stockée.
    """
    t: float = 0.0
    c: float = 0.0
    u: float = 0.0
    f: float = 0.0

    def __post_init__(self):
        for name in ('t', 'c', 'u', 'f'):
            value = getattr(self, name)
            if isinstance(value, bool):
                raise DomainError(f"{name} must be a number")
            value = float(value)
            if not math.isfinite(value) or value < -PENTA_TOLERANCE:
                raise DomainError(f"{name} out of range: {value!r}")
            object.__setattr__(self, name, value)
        if self.t + self.c + self.u + self.f > 1.0 + PENTA_TOLERANCE:
            raise DomainError(
                f"t+c+u+f exceeds 1: {self.t + self.c + self.u + self.f!r}"
            )

    @property
    def i(self):
        return 1.0 - self.t - self.c - self.u - self.f

    def components(self):
        return (self.t, self.c, self.u, self.f)

    def distribution(self):
        """Les cinq parts (t, f, c, u, i) qui somment à 1"""
        return (self.t, self.f, self.c, self.u, self.i)

    def as_dict(self):
        return {'t': self.t, 'f': self.f, 'c': self.c, 'u': self.u, 'i': self.i}


@dataclass(frozen=True)
class CrispConstant:
    label: str
    vector: PentaValue

    @property
    def symbol(self):
        return self.label.lower()


TRUE = CrispConstant('T', PentaValue(t=1.0))
FALSE = CrispConstant('F', PentaValue(f=1.0))
INCONSISTENT = CrispConstant('C', PentaValue(c=1.0))
INCOMPLETE = CrispConstant('U', PentaValue(u=1.0))
AMBIGUOUS = CrispConstant('I', PentaValue())

CONSTANTS_BY_SYMBOL = {
    constant.symbol: constant
    for constant in (TRUE, FALSE, INCONSISTENT, INCOMPLETE, AMBIGUOUS)
}


def crisp_constants():
    """Les cinq constantes T, F, C, U, I"""
    return [TRUE, FALSE, INCONSISTENT, INCOMPLETE, AMBIGUOUS]


def penta_from_tau_delta(td):
    return PentaValue(
        t=max(td.tau, 0.0),
        c=max(td.delta, 0.0),
        u=max(-td.delta, 0.0),
        f=max(-td.tau, 0.0),
    )


def to_penta(v, mode=TransformMode.STANDARD):
    """
    Parties positives et négatives de τ et δ : t = τ+, f = τ-, c = δ+, u = δ-.
    Par construction t·f = 0 et c·u = 0.
    """
    return penta_from_tau_delta(tau_delta(v, mode))


def from_penta(p):
    """
    Antécédent standard de p. Il n'est unique que si t·f = 0 et c·u = 0.
    """
    if p.t * p.f > PENTA_TOLERANCE or p.c * p.u > PENTA_TOLERANCE:
        raise AmbiguousPreimageError(
            f"no unique (mu, nu) for t={p.t!r}, c={p.c!r}, u={p.u!r}, f={p.f!r}"
        )
    return invert_standard(TauDelta(p.t - p.f, p.c - p.u, TransformMode.STANDARD))


def crisp_label(p, tolerance=CRISP_TOLERANCE):
    """Symbole de la constante égale à p à la tolérance près, sinon None"""
    for symbol, constant in CONSTANTS_BY_SYMBOL.items():
        if all(
            abs(a - b) <= tolerance
            for a, b in zip(p.components(), constant.vector.components())
        ):
            return symbol
    return None
