# core/values.py
"""
Modèle primal des valeurs bifloues (μ,ν) : coordonnées (τ,δ) standard et
équilibrées, distance généralisée D et classification floue /
intuitionniste / paraconsistante.
"""
import enum
from dataclasses import dataclass

from .exceptions import DomainError, UsageError

# Bande autour de μ+ν-1 = 0 considérée comme « floue »
CLASSIFY_TOLERANCE = 1e-9

# a + b = max(|2μ-1|, |2ν-1|) <= 1 donc a·b <= 1/4
MIN_BALANCED_DENOMINATOR = 0.75


class TransformMode(str, enum.Enum):
    STANDARD = 'standard'
    BALANCED = 'balanced'


class ClassKind(str, enum.Enum):
    FUZZY = 'fuzzy'
    INTUITIONISTIC = 'intuitionistic'
    PARACONSISTENT = 'paraconsistent'


def parse_mode(value):
    """Convertit un nom de mode (ou un TransformMode) en TransformMode"""
    if isinstance(value, TransformMode):
        return value
    try:
        return TransformMode(str(value).strip().lower())
    except ValueError:
        raise UsageError(f"unknown mode '{value}' (expected standard or balanced)")


def check_unit(name, value):
    """Valide un degré de [0,1] sans jamais le ramener dans l'intervalle"""
    if isinstance(value, bool):
        raise DomainError(f"{name} must be a number")
    try:
        value = float(value)
    except (TypeError, ValueError):
        raise DomainError(f"{name} must be a number")
    # NaN échoue aussi à cette comparaison
    if not 0.0 <= value <= 1.0:
        raise DomainError(f"{name} out of range")
    return value


@dataclass(frozen=True)
class BifuzzyValue:
    """
    Valeur bifloue : degré d'appartenance μ et degré de non-appartenance ν,
    totalement indépendants.
    """
    mu: float
    nu: float

    def __post_init__(self):
        object.__setattr__(self, 'mu', check_unit('mu', self.mu))
        object.__setattr__(self, 'nu', check_unit('nu', self.nu))

    def __iter__(self):
        yield self.mu
        yield self.nu


@dataclass(frozen=True)
class TauDelta:
    """Vérité nette τ et définition δ, avec le mode de transformation"""
    tau: float
    delta: float
    mode: TransformMode = TransformMode.STANDARD


@dataclass(frozen=True)
class Classification:
    kind: ClassKind
    index: float


def _distances(v):
    """Retourne (a, b) = (|μ-ν|, |μ+ν-1|)"""
    return abs(v.mu - v.nu), abs(v.mu + v.nu - 1.0)


def _balanced_denominator(a, b):
    denominator = 1.0 - a * b
    if denominator < MIN_BALANCED_DENOMINATOR - 1e-12:
        raise ArithmeticError(
            f"balanced denominator {denominator!r} below 3/4 (a={a!r}, b={b!r})"
        )
    return denominator


def tau_delta_standard(v):
    """τ = μ - ν, δ = μ + ν - 1"""
    return TauDelta(v.mu - v.nu, v.mu + v.nu - 1.0, TransformMode.STANDARD)


def tau_delta_balanced(v):
    """
    Forme équilibrée : chaque coordonnée est atténuée par la distance de
    l'autre, de sorte que (a·b̄, ā·b, ā·b̄)/(1-a·b) forme une partition de l'unité.
    """
    a, b = _distances(v)
    denominator = _balanced_denominator(a, b)
    tau = (1.0 - b) / denominator * (v.mu - v.nu)
    delta = (1.0 - a) / denominator * (v.mu + v.nu - 1.0)
    return TauDelta(tau, delta, TransformMode.BALANCED)


def tau_delta(v, mode=TransformMode.STANDARD):
    if parse_mode(mode) is TransformMode.BALANCED:
        return tau_delta_balanced(v)
    return tau_delta_standard(v)


def invert_standard(td):
    """
    Inverse de la transformation standard. L'inverse de la forme équilibrée
    n'a pas de forme close connue : elle est refusée.
    """
    if td.mode is not TransformMode.STANDARD:
        raise DomainError("only standard (tau, delta) pairs can be inverted")
    mu = _snap_rounding((1.0 + td.tau + td.delta) / 2.0)
    nu = _snap_rounding((1.0 - td.tau + td.delta) / 2.0)
    return BifuzzyValue(mu, nu)


def _snap_rounding(value, tolerance=1e-12):
    # Seul le bruit d'arrondi aux bornes est ramené ; le reste est validé
    if -tolerance < value < 0.0:
        return 0.0
    if 1.0 < value < 1.0 + tolerance:
        return 1.0
    return value


def distance_d(v):
    """D(μ,ν) = a·(1-b)/(1-a·b)"""
    a, b = _distances(v)
    return a * (1.0 - b) / _balanced_denominator(a, b)


def distance_d_complementary(v):
    """D(μ,1-ν) = (1-a)·b/(1-a·b)"""
    a, b = _distances(v)
    return (1.0 - a) * b / _balanced_denominator(a, b)


def classify(v, tolerance=CLASSIFY_TOLERANCE):
    """Classe la valeur selon le signe de μ+ν-1 (indice π ou κ)"""
    excess = v.mu + v.nu - 1.0
    if excess > tolerance:
        return Classification(ClassKind.PARACONSISTENT, excess)
    if excess < -tolerance:
        return Classification(ClassKind.INTUITIONISTIC, -excess)
    return Classification(ClassKind.FUZZY, 0.0)


def complement(v):
    """x^c = (ν, μ)"""
    return BifuzzyValue(v.nu, v.mu)
