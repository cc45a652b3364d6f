# measures/scalar.py
"""
Similarité, entropie et syntropie d'une valeur à cinq composantes.

L'entropie est calculée directement (c + u + i). La route par similarité
S(x, x^c) ne coïncide avec elle que si t·f = 0, ce qui est toujours le cas
des vecteurs issus de to_penta mais pas des vecteurs construits à la main.
"""
import math
from typing import NamedTuple

from penta.algebra import complement


class EntropyVector(NamedTuple):
    c: float
    u: float
    i: float

    @property
    def total(self):
        return self.c + self.u + self.i


class SyntropyVector(NamedTuple):
    t: float
    f: float

    @property
    def total(self):
        return self.t + self.f


def _root(product):
    # i dérivé peut valoir -1e-17 : le bruit d'arrondi ne doit pas produire NaN
    return math.sqrt(product) if product > 0.0 else 0.0


def similarity(x1, x2):
    """Coefficient de Bhattacharyya entre les deux distributions (t, f, c, u, i)"""
    return sum(_root(a * b) for a, b in zip(x1.distribution(), x2.distribution()))


def entropy(x):
    vector = EntropyVector(x.c, x.u, x.i)
    return vector.total, vector


def entropy_via_similarity(x):
    """S(x, x^c) ; dépasse c + u + i de 2·sqrt(t·f) quand t·f > 0"""
    return similarity(x, complement(x))


def syntropy(x):
    vector = SyntropyVector(x.t, x.f)
    return vector.total, vector


def _balanced_terms(v):
    a = abs(v.mu - v.nu)
    b = abs(v.mu + v.nu - 1.0)
    return a, b, 1.0 - a * b


def entropy_closed_form_balanced(v):
    """e = (1 - a) / (1 - a·b)"""
    a, _, denominator = _balanced_terms(v)
    return (1.0 - a) / denominator


def syntropy_closed_form_balanced(v):
    """γ = a·(1 - b) / (1 - a·b)"""
    a, b, denominator = _balanced_terms(v)
    return a * (1.0 - b) / denominator
