# core/exceptions.py


class BifuzzyError(Exception):
    """Exception racine de toutes les erreurs du projet"""
    pass


class DomainError(BifuzzyError, ValueError):
    """Valeur hors du domaine : degré hors de [0,1], NaN, vecteur invalide..."""
    pass


class AmbiguousPreimageError(DomainError):
    """Le vecteur n'a pas d'antécédent unique (μ,ν)"""
    pass


class ClosureError(DomainError):
    """Le résultat d'une union/intersection n'est plus un vecteur valide"""

    def __init__(self, message, operands=None, result=None):
        super().__init__(message)
        self.operands = operands or ()
        self.result = result


class NonCrispResultError(BifuzzyError):
    """Une cellule de table de vérité ne correspond à aucune constante"""
    pass


class SetFormatError(DomainError):
    """Erreur de lecture d'un ensemble (CSV ou JSON)"""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"{message}, line {line}"
        super().__init__(message)


class UniverseMismatchError(DomainError):
    """Les deux ensembles ne portent pas sur les mêmes éléments"""

    def __init__(self, missing, extra):
        self.missing = list(missing)
        self.extra = list(extra)
        parts = []
        if self.missing:
            parts.append(f"missing: {', '.join(self.missing)}")
        if self.extra:
            parts.append(f"extra: {', '.join(self.extra)}")
        super().__init__("universe mismatch (" + "; ".join(parts) + ")")


class UsageError(BifuzzyError):
    """Arguments de commande invalides"""
    pass


class VerificationFailed(BifuzzyError):
    """Au moins une loi ou une table n'a pas été vérifiée"""
    pass
