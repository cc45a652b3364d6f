# sets/bifuzzy_set.py
"""
Ensemble biflou fini : un nom et une table étiquette -> (μ,ν).

Les éléments sont toujours rangés dans l'ordre canonique des étiquettes
(ordre lexicographique des octets), ce qui fixe l'ordre des sommes et des
sérialisations.
"""
import re
from dataclasses import dataclass, field
from types import MappingProxyType

from core.exceptions import DomainError
from core.values import BifuzzyValue

LABEL_PATTERN = re.compile(r'^[A-Za-z0-9_.-]+$')


def canonical_key(label):
    return label.encode('utf-8')


def check_label(label):
    if not isinstance(label, str) or not LABEL_PATTERN.match(label):
        raise DomainError(f"invalid label {label!r} (allowed characters: A-Z a-z 0-9 _ . -)")
    return label


@dataclass(frozen=True)
class BifuzzySet:
    name: str = ''
    items: tuple = field(default=())

    def __post_init__(self):
        seen = set()
        items = []
        for label, value in self.items:
            check_label(label)
            if label in seen:
                raise DomainError(f"duplicate label '{label}'")
            if not isinstance(value, BifuzzyValue):
                value = BifuzzyValue(*value)
            seen.add(label)
            items.append((label, value))
        items.sort(key=lambda item: canonical_key(item[0]))
        object.__setattr__(self, 'items', tuple(items))

    @classmethod
    def from_mapping(cls, name, elements):
        return cls(name=name, items=tuple(elements.items()))

    @property
    def elements(self):
        return MappingProxyType(dict(self.items))

    def labels(self):
        return [label for label, _ in self.items]

    def __len__(self):
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    def __contains__(self, label):
        return any(label == known for known, _ in self.items)
