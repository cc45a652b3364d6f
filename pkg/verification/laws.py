# verification/laws.py
"""
Lois vérifiées par le vérificateur.

Chaque loi reçoit un SampleSource (grille, tirages reproductibles) et,
pour les lois qui dépendent de l'union/intersection, un couple de normes.
Elle rend un LawResult : succès, nombre de cas examinés et, en cas d'échec,
le premier contre-exemple rencontré.
"""
import enum
import math
import zlib
from dataclasses import dataclass

import numpy as np

from core.exceptions import BifuzzyError, ClosureError
from core.utils import format_number
from core.values import (
    BifuzzyValue, TransformMode, distance_d, distance_d_complementary,
    tau_delta_balanced, tau_delta_standard,
)
from measures.scalar import (
    entropy, entropy_closed_form_balanced, entropy_via_similarity, similarity,
    syntropy, syntropy_closed_form_balanced,
)
from penta.algebra import complement, dual, intersection, negation, union
from penta.representation import PentaValue, from_penta, to_penta
from penta.tables import OPERATORS, check_truth_table, generate_truth_table

EXACT = 1e-12
LOOSE = 1e-9

GLOBAL_SCOPE = 'all'


@dataclass(frozen=True)
class LawResult:
    law: str
    scope: str
    passed: bool
    checked: int
    counterexample: str = ''

    def as_dict(self):
        return {
            'law': self.law,
            'scope': self.scope,
            'passed': self.passed,
            'checked': self.checked,
            'counterexample': self.counterexample or None,
        }


class SampleSource:
    """
    Fournit la grille régulière et des tirages aléatoires reproductibles.
    Chaque loi reçoit son propre générateur, dérivé de la graine et du nom
    de la loi : le résultat ne dépend pas de l'ordre d'évaluation.
    """

    def __init__(self, seed, samples, grid, mode):
        self.seed = seed & 0xFFFFFFFFFFFFFFFF
        self.samples = samples
        self.grid = grid
        self.mode = mode
        axis = np.arange(grid + 1) / grid
        self._grid_points = [(float(mu), float(nu)) for mu in axis for nu in axis]

    def rng(self, law, scope):
        key = zlib.crc32(f"{law}:{scope}".encode('utf-8'))
        return np.random.default_rng([self.seed, key])

    def grid_values(self):
        return [BifuzzyValue(mu, nu) for mu, nu in self._grid_points]

    def unit_pairs(self, law, scope):
        draws = self.rng(law, scope).random((self.samples, 2))
        return [(float(a), float(b)) for a, b in draws]

    def penta_tuples(self, law, scope, arity):
        """arity vecteurs par tirage, obtenus par to_penta sur (μ,ν) uniformes"""
        draws = self.rng(law, scope).random((self.samples, arity, 2))
        return [
            tuple(to_penta(BifuzzyValue(float(mu), float(nu)), self.mode) for mu, nu in row)
            for row in draws
        ]


def describe(x):
    if isinstance(x, PentaValue):
        return '(' + ', '.join(f"{name}={format_number(getattr(x, name))}" for name in 'tcuf') + ')'
    if isinstance(x, BifuzzyValue):
        return f"(mu={format_number(x.mu)}, nu={format_number(x.nu)})"
    if isinstance(x, enum.Enum):
        return x.value
    if isinstance(x, float):
        return format_number(x)
    return str(x)


def _describe_case(case):
    return ' '.join(f"{name}={describe(value)}" for name, value in case.items())


def _verdict(checks):
    if all(checks):
        return True, ''
    return False, f"failed check #{checks.index(False) + 1}"


def _close(a, b, tolerance=EXACT):
    return abs(a - b) <= tolerance


def _same(x, y, tolerance=EXACT):
    return all(_close(a, b, tolerance) for a, b in zip(x.components(), y.components()))


def _run(law, scope, cases, predicate):
    """
    Évalue predicate sur chaque cas (dictionnaire nom -> valeur) et
    s'arrête au premier échec.
    """
    checked = 0
    for case in cases:
        checked += 1
        try:
            ok, note = predicate(**case)
        except ClosureError as exc:
            ok, note = False, str(exc)
        if not ok:
            text = _describe_case(case) + (f" ({note})" if note else '')
            return LawResult(law, scope, False, checked, text)
    return LawResult(law, scope, True, checked)


# === Lois globales (indépendantes du couple) ===
def law_partition_of_unity(source):
    modes = (TransformMode.STANDARD, TransformMode.BALANCED)
    cases = ({'v': v, 'mode': mode} for mode in modes for v in source.grid_values())

    def predicate(v, mode):
        p = to_penta(v, mode)
        total = p.t + p.f + p.c + p.u + p.i
        return _close(total, 1.0) and p.i >= -EXACT, f"sum={total!r}"

    return _run('partition_of_unity', GLOBAL_SCOPE, cases, predicate)


def law_truth_definedness_bound(source):
    cases = ({'v': v} for v in source.grid_values())

    def predicate(v):
        standard = tau_delta_standard(v)
        balanced = tau_delta_balanced(v)
        a, b = abs(v.mu - v.nu), abs(v.mu + v.nu - 1.0)
        reach = max(abs(2 * v.mu - 1.0), abs(2 * v.nu - 1.0))
        checks = (
            abs(standard.tau) + abs(standard.delta) <= 1.0 + EXACT,
            abs(balanced.tau) + abs(balanced.delta) <= 1.0 + EXACT,
            _close(a + b, reach),
            1.0 - a * b >= 0.75 - EXACT,
            _close(a * (1 - b) + (1 - a) * b + (1 - a) * (1 - b), 1.0 - a * b),
        )
        return _verdict(checks)

    return _run('truth_definedness_bound', GLOBAL_SCOPE, cases, predicate)


def law_standard_closed_forms(source):
    cases = ({'v': v} for v in source.grid_values())

    def predicate(v):
        p = to_penta(v, TransformMode.STANDARD)
        ambiguity = 2.0 * min(v.mu, v.nu, 1.0 - v.mu, 1.0 - v.nu)
        checks = (
            _close(p.i, ambiguity),
            _close(p.t + p.f, abs(v.mu - v.nu)),
            _close(entropy(p)[0], 1.0 - abs(v.mu - v.nu)),
        )
        return _verdict(checks)

    return _run('standard_closed_forms', GLOBAL_SCOPE, cases, predicate)


def law_balanced_closed_forms(source):
    cases = ({'v': v} for v in source.grid_values())

    def predicate(v):
        p = to_penta(v, TransformMode.BALANCED)
        e = entropy_closed_form_balanced(v)
        gamma = syntropy_closed_form_balanced(v)
        checks = (
            _close(entropy(p)[0], e),
            _close(syntropy(p)[0], gamma),
            _close(gamma, distance_d(v)),
            _close(abs(tau_delta_balanced(v).delta), distance_d_complementary(v)),
            _close(e + gamma, 1.0),
            (distance_d(v) == 0.0) == (v.mu == v.nu),
        )
        return _verdict(checks)

    return _run('balanced_closed_forms', GLOBAL_SCOPE, cases, predicate)


def law_balanced_signs(source):
    """Le mode équilibré garde les signes de μ-ν et μ+ν-1 ; τ est inchangé si b = 0"""
    cases = ({'v': v} for v in source.grid_values())

    def predicate(v):
        standard = tau_delta_standard(v)
        balanced = tau_delta_balanced(v)
        checks = [
            bool(np.sign(balanced.tau) == np.sign(standard.tau)),
            bool(np.sign(balanced.delta) == np.sign(standard.delta)),
        ]
        if abs(standard.delta) <= EXACT:
            checks.append(_close(balanced.tau, standard.tau))
        return _verdict(checks)

    return _run('balanced_signs', GLOBAL_SCOPE, cases, predicate)


def law_transform_continuity(source):
    """Deux points voisins de la grille diffèrent d'au plus deux pas par composante"""
    n = source.grid
    values = source.grid_values()
    bound = 2.0 / n + EXACT
    modes = (TransformMode.STANDARD, TransformMode.BALANCED)

    def cases():
        for mode in modes:
            for index, v in enumerate(values):
                row, column = divmod(index, n + 1)
                if row < n:
                    yield {'v': v, 'w': values[index + n + 1], 'mode': mode}
                if column < n:
                    yield {'v': v, 'w': values[index + 1], 'mode': mode}

    def predicate(v, w, mode):
        pairs = zip(to_penta(v, mode).distribution(), to_penta(w, mode).distribution())
        jump = max(abs(a - b) for a, b in pairs)
        return jump <= bound, f"jump={jump!r}"

    return _run('transform_continuity', GLOBAL_SCOPE, cases(), predicate)


def law_round_trip(source):
    cases = ({'v': v} for v in source.grid_values())

    def predicate(v):
        back = from_penta(to_penta(v, TransformMode.STANDARD))
        return _close(back.mu, v.mu) and _close(back.nu, v.nu), f"got {describe(back)}"

    return _run('round_trip', GLOBAL_SCOPE, cases, predicate)


def law_entropy_maximality(source):
    modes = (TransformMode.STANDARD, TransformMode.BALANCED)
    cases = ({'v': v, 'mode': mode} for mode in modes for v in source.grid_values())

    def predicate(v, mode):
        e = entropy(to_penta(v, mode))[0]
        at_max = _close(e, 1.0)
        return at_max == (v.mu == v.nu), f"entropy={e!r}"

    return _run('entropy_maximality', GLOBAL_SCOPE, cases, predicate)


def law_entropy_discrimination(source):
    """Même entropie scalaire, sources différentes : ambiguïté contre incomplétude"""
    expected = {
        (0.5, 0.5): (0.0, 0.0, 1.0),
        (0.0, 0.0): (0.0, 1.0, 0.0),
    }
    modes = (TransformMode.STANDARD, TransformMode.BALANCED)
    cases = (
        {'v': BifuzzyValue(*point), 'mode': mode}
        for mode in modes for point in expected
    )

    def predicate(v, mode):
        scalar, vector = entropy(to_penta(v, mode))
        want = expected[(v.mu, v.nu)]
        ok = _close(scalar, 1.0) and all(_close(a, b) for a, b in zip(vector, want))
        return ok, f"entropy={scalar!r}, vector={tuple(vector)!r}"

    return _run('entropy_discrimination', GLOBAL_SCOPE, cases, predicate)


def law_involutions(source):
    cases = ({'x': x} for (x,) in source.penta_tuples('involutions', GLOBAL_SCOPE, 1))

    def predicate(x):
        checks = (
            complement(complement(x)) == x,
            negation(negation(x)) == x,
            dual(dual(x)) == x,
            dual(complement(x)) == negation(x),
        )
        return _verdict(checks)

    return _run('involutions', GLOBAL_SCOPE, cases, predicate)


def law_similarity_entropy_route(source):
    """
    S(x, x^c) = c + u + i quand t·f = 0 ; sinon l'écart vaut exactement
    2·sqrt(t·f) (vecteurs construits à la main).
    """
    rng = source.rng('similarity_entropy_route:manual', GLOBAL_SCOPE)
    cases = []
    for (x,) in source.penta_tuples('similarity_entropy_route', GLOBAL_SCOPE, 1):
        cases.append({'x': x})
    for weights in rng.dirichlet(np.ones(5), size=source.samples):
        t, c, u, f, _ = (float(w) for w in weights)
        cases.append({'x': PentaValue(t=t, c=c, u=u, f=f)})

    def predicate(x):
        gap = entropy_via_similarity(x) - entropy(x)[0]
        return _close(gap, 2.0 * math.sqrt(x.t * x.f), LOOSE), f"gap={gap!r}"

    return _run('similarity_entropy_route', GLOBAL_SCOPE, cases, predicate)


def law_similarity_bound(source):
    pairs = source.penta_tuples('similarity_bound', GLOBAL_SCOPE, 2)
    cases = [{'x': x, 'y': y} for x, y in pairs] + [{'x': x, 'y': x} for x, _ in pairs]

    def predicate(x, y):
        s = similarity(x, y)
        equal = _same(x, y, LOOSE)
        ok = s <= 1.0 + EXACT and (_close(s, 1.0, LOOSE) if equal else s < 1.0 - EXACT)
        ok = ok and _close(s, similarity(y, x))
        return ok, f"S={s!r}"

    return _run('similarity_bound', GLOBAL_SCOPE, cases, predicate)


# === Lois dépendant du couple ===
def law_frank_equation(source, couple):
    cases = ({'a': a, 'b': b} for a, b in source.unit_pairs('frank_equation', couple.name))

    def predicate(a, b):
        T, S = couple.t_norm(a, b), couple.t_conorm(a, b)
        checks = (
            _close(T + S, a + b),
            _close(S, 1.0 - couple.t_norm(1.0 - a, 1.0 - b)),
            _close(couple.t_norm(a, 1.0), a),
            _close(couple.t_conorm(a, 0.0), a),
        )
        return all(checks), f"T={T!r}, S={S!r}"

    return _run('frank_equation', couple.name, cases, predicate)


def law_norm_monotonicity(source, couple):
    draws = source.rng('norm_monotonicity', couple.name).random((source.samples, 3))
    cases = (
        {'a': float(min(p, q)), 'a2': float(max(p, q)), 'b': float(r)}
        for p, q, r in draws
    )

    def predicate(a, a2, b):
        ok = (couple.t_norm(a, b) <= couple.t_norm(a2, b) + EXACT
              and couple.t_conorm(a, b) <= couple.t_conorm(a2, b) + EXACT)
        return ok, ''

    return _run('norm_monotonicity', couple.name, cases, predicate)


def law_union_monotonicity(source, couple):
    """La composante t de l'union croît avec t1, la composante f avec f1"""
    cases = (
        {'x': x, 'x2': x2, 'y': y}
        for x, x2, y in source.penta_tuples('union_monotonicity', couple.name, 3)
    )

    def predicate(x, x2, y):
        low, high = sorted((x, x2), key=lambda p: p.t)
        checks = [union(low, y, couple).t <= union(high, y, couple).t + EXACT]
        low, high = sorted((x, x2), key=lambda p: p.f)
        checks.append(union(low, y, couple).f <= union(high, y, couple).f + EXACT)
        return _verdict(checks)

    return _run('union_monotonicity', couple.name, cases, predicate)


def law_truth_tables(source, couple):
    checked = 0
    for operator in OPERATORS:
        try:
            table = generate_truth_table(operator, couple)
        except BifuzzyError as exc:
            return LawResult('truth_tables', couple.name, False, checked, f"{operator}: {exc}")
        mismatches = check_truth_table(table)
        checked += table.size()
        if mismatches:
            first = mismatches[0]
            text = (f"{operator} row {first.row} column {first.column or '-'}: "
                    f"got {first.got}, expected {first.expected} "
                    f"({len(mismatches)} mismatch(es) in Table {table.number})")
            return LawResult('truth_tables', couple.name, False, checked, text)
    return LawResult('truth_tables', couple.name, True, checked)


def law_de_morgan(source, couple):
    cases = ({'x': x, 'y': y} for x, y in source.penta_tuples('de_morgan', couple.name, 2))

    def predicate(x, y):
        left = complement(union(x, y, couple))
        right = intersection(complement(x), complement(y), couple)
        return _same(left, right), f"left={describe(left)} right={describe(right)}"

    return _run('de_morgan', couple.name, cases, predicate)


def law_commutativity(source, couple):
    cases = ({'x': x, 'y': y} for x, y in source.penta_tuples('commutativity', couple.name, 2))

    def predicate(x, y):
        ok = (_same(union(x, y, couple), union(y, x, couple))
              and _same(intersection(x, y, couple), intersection(y, x, couple)))
        return ok, ''

    return _run('commutativity', couple.name, cases, predicate)


def law_associativity(source, couple):
    cases = (
        {'x': x, 'y': y, 'z': z}
        for x, y, z in source.penta_tuples('associativity', couple.name, 3)
    )

    def predicate(x, y, z):
        ok = (
            _same(union(union(x, y, couple), z, couple), union(x, union(y, z, couple), couple))
            and _same(
                intersection(intersection(x, y, couple), z, couple),
                intersection(x, intersection(y, z, couple), couple),
            )
        )
        return ok, ''

    return _run('associativity', couple.name, cases, predicate)


def law_modularity(source, couple):
    cases = ({'x': x, 'y': y} for x, y in source.penta_tuples('modularity', couple.name, 2))

    def predicate(x, y):
        joined, met = union(x, y, couple), intersection(x, y, couple)
        e_gap = entropy(joined)[0] + entropy(met)[0] - entropy(x)[0] - entropy(y)[0]
        g_gap = syntropy(joined)[0] + syntropy(met)[0] - syntropy(x)[0] - syntropy(y)[0]
        return abs(e_gap) <= LOOSE and abs(g_gap) <= LOOSE, f"gaps={e_gap!r}, {g_gap!r}"

    return _run('modularity', couple.name, cases, predicate)


def law_closure(source, couple):
    cases = ({'x': x, 'y': y} for x, y in source.penta_tuples('closure', couple.name, 2))

    def predicate(x, y):
        # Une sortie hors tolérance lève déjà ClosureError, capturée par _run
        checks = []
        for result in (union(x, y, couple), intersection(x, y, couple)):
            checks.append(result.t + result.c + result.u + result.f <= 1.0 + EXACT)
            checks.append(min(result.distribution()) >= -EXACT)
        return _verdict(checks)

    return _run('closure', couple.name, cases, predicate)


def law_idempotence(source, couple):
    cases = ({'x': x} for (x,) in source.penta_tuples('idempotence', couple.name, 1))

    def predicate(x):
        joined, met = union(x, x, couple), intersection(x, x, couple)
        ok = _same(joined, x) and _same(met, x)
        return ok, f"x|x={describe(joined)} x&x={describe(met)}"

    return _run('idempotence', couple.name, cases, predicate)


def law_cu_preservation(source, couple):
    """Si c·u = 0 en entrée, c·u = 0 en sortie (seul min/max le garantit)"""
    cases = ({'x': x, 'y': y} for x, y in source.penta_tuples('cu_preservation', couple.name, 2))

    def predicate(x, y):
        joined, met = union(x, y, couple), intersection(x, y, couple)
        ok = joined.c * joined.u <= EXACT and met.c * met.u <= EXACT
        return ok, f"x|y={describe(joined)} x&y={describe(met)}"

    return _run('cu_preservation', couple.name, cases, predicate)


GLOBAL_LAWS = (
    law_partition_of_unity,
    law_truth_definedness_bound,
    law_standard_closed_forms,
    law_balanced_closed_forms,
    law_balanced_signs,
    law_transform_continuity,
    law_round_trip,
    law_entropy_maximality,
    law_entropy_discrimination,
    law_involutions,
    law_similarity_entropy_route,
    law_similarity_bound,
)

COUPLE_LAWS = (
    law_frank_equation,
    law_norm_monotonicity,
    law_union_monotonicity,
    law_truth_tables,
    law_de_morgan,
    law_commutativity,
    law_associativity,
    law_modularity,
    law_closure,
    law_idempotence,
    law_cu_preservation,
)
