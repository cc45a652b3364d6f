# measures/sets.py
"""
Agrégation sur un ensemble : l'entropie (ou la syntropie) d'un ensemble est
la somme de celles de ses éléments, prises dans l'ordre canonique.
"""
import logging

from core.exceptions import UniverseMismatchError
from core.values import TransformMode, classify, tau_delta
from penta.representation import penta_from_tau_delta, to_penta

from .scalar import EntropyVector, SyntropyVector, entropy, similarity, syntropy

logger = logging.getLogger(__name__)


def set_entropy(s, mode=TransformMode.STANDARD):
    """Somme des entropies (scalaire et composantes c, u, i)"""
    scalar = c = u = i = 0.0
    for _, value in s:
        element, vector = entropy(to_penta(value, mode))
        scalar += element
        c += vector.c
        u += vector.u
        i += vector.i
    return scalar, EntropyVector(c, u, i)


def set_syntropy(s, mode=TransformMode.STANDARD):
    """Somme des syntropies (scalaire et composantes t, f)"""
    scalar = t = f = 0.0
    for _, value in s:
        element, vector = syntropy(to_penta(value, mode))
        scalar += element
        t += vector.t
        f += vector.f
    return scalar, SyntropyVector(t, f)


def _mean(total, count):
    return total / count if count else 0.0


def set_mean_entropy(s, mode=TransformMode.STANDARD):
    return _mean(set_entropy(s, mode)[0], len(s))


def set_mean_syntropy(s, mode=TransformMode.STANDARD):
    return _mean(set_syntropy(s, mode)[0], len(s))


def check_universes(s1, s2):
    labels1, labels2 = set(s1.labels()), set(s2.labels())
    if labels1 != labels2:
        missing = [label for label in s1.labels() if label not in labels2]
        extra = [label for label in s2.labels() if label not in labels1]
        logger.error(f"Univers différents: {len(missing)} manquant(s), {len(extra)} en trop")
        raise UniverseMismatchError(missing, extra)


def set_similarity(s1, s2, mode=TransformMode.STANDARD):
    """
    Moyenne arithmétique des similarités élément par élément. Deux ensembles
    vides sont considérés identiques (similarité 1).
    """
    check_universes(s1, s2)
    if not len(s1):
        return 1.0
    total = 0.0
    for (_, v1), (_, v2) in zip(s1, s2):
        total += similarity(to_penta(v1, mode), to_penta(v2, mode))
    return total / len(s1)


def set_profile(s, mode=TransformMode.STANDARD):
    """Fiche de chaque élément : (τ, δ), cinq indices, classe, entropie, syntropie"""
    profile = []
    for label, value in s:
        td = tau_delta(value, mode)
        penta = penta_from_tau_delta(td)
        classification = classify(value)
        profile.append({
            'label': label,
            'mu': value.mu,
            'nu': value.nu,
            'tau': td.tau,
            'delta': td.delta,
            **penta.as_dict(),
            'class': classification.kind.value,
            'index': classification.index,
            'entropy': entropy(penta)[0],
            'syntropy': syntropy(penta)[0],
        })
    return profile
