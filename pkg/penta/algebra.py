# penta/algebra.py
"""
Opérateurs sur les vecteurs (t, c, u, f).

L'union et l'intersection dépendent du couple de Frank choisi ; le
complément, la négation et le dual sont des permutations de composantes.
L'implication et l'équivalence sont étendues aux vecteurs non nets par
x -> y = x^c ∪ y et x <-> y = (x -> y) ∩ (y -> x).
"""
import logging

from core.exceptions import ClosureError, DomainError

from .norms import MIN_MAX
from .representation import PentaValue

logger = logging.getLogger(__name__)


def _closed(operator, operands, t, c, u, f):
    """Construit le résultat en vérifiant qu'il reste un vecteur valide"""
    try:
        return PentaValue(t=t, c=c, u=u, f=f)
    except DomainError as exc:
        logger.error(f"Résultat hors domaine pour {operator}: {exc}")
        raise ClosureError(
            f"{operator} left the PentaValue domain: {exc}",
            operands=operands,
            result=(t, c, u, f),
        ) from exc


def union(x1, x2, couple=MIN_MAX):
    T, S = couple.t_norm, couple.t_conorm
    low_f = T(x1.f, x2.f)
    return _closed(
        'union', (x1, x2),
        t=S(x1.t, x2.t),
        c=T(x1.c + x1.f, x2.c + x2.f) - low_f,
        u=T(x1.u + x1.f, x2.u + x2.f) - low_f,
        f=low_f,
    )


def intersection(x1, x2, couple=MIN_MAX):
    T, S = couple.t_norm, couple.t_conorm
    low_t = T(x1.t, x2.t)
    return _closed(
        'intersection', (x1, x2),
        t=low_t,
        c=T(x1.c + x1.t, x2.c + x2.t) - low_t,
        u=T(x1.u + x1.t, x2.u + x2.t) - low_t,
        f=S(x1.f, x2.f),
    )


def complement(x):
    """(t,c,u,f) -> (f,c,u,t)"""
    return PentaValue(t=x.f, c=x.c, u=x.u, f=x.t)


def negation(x):
    """(t,c,u,f) -> (f,u,c,t)"""
    return PentaValue(t=x.f, c=x.u, u=x.c, f=x.t)


def dual(x):
    """(t,c,u,f) -> (t,u,c,f)"""
    return PentaValue(t=x.t, c=x.u, u=x.c, f=x.f)


def implication(x, y, couple=MIN_MAX):
    return union(complement(x), y, couple)


def equivalence(x, y, couple=MIN_MAX):
    return intersection(implication(x, y, couple), implication(y, x, couple), couple)


# Opérateurs exposés par nom (tables de vérité, commandes)
BINARY_OPERATORS = {
    'disjunction': union,
    'conjunction': intersection,
    'implication': implication,
    'equivalence': equivalence,
}

UNARY_OPERATORS = {
    'complement': complement,
    'negation': negation,
    'dual': dual,
}
