"""Brute-force reference implementations and small exhaustive corpora.

Nothing here shares code with the flow-based surplus or the matching
construction; these functions exist to check them.
"""

from itertools import combinations, permutations, product

import numpy as np

from .cnf import MultiClauseSet, apply, clause_key, make_clause, restrict
from .errors import TheoryViolation, check_guard
from .matching import SurplusCertificate

#: Default variable limit for exhaustive subset and assignment enumeration.
BRUTE_GUARD = 16

#: Exhaustive clause-set enumeration is only offered up to this many variables.
ENUMERATION_GUARD = 3


def _subsets(variables):
    for size in range(1, len(variables) + 1):
        yield from combinations(variables, size)


def brute_surplus(F, guard=BRUTE_GUARD):
    """Surplus by evaluating delta(F[V]) on all 2^n - 1 non-empty subsets.

    The certificate's ``witness`` is the lexicographically smallest minimizer
    (as a sorted tuple) and ``maximal_witness`` the largest minimizer sharing
    its first variable, which for surplus <= 0 is the union of all of them.
    """
    variables = sorted(F.variables)
    if not variables:
        raise ValueError("surplus is undefined for a clause-set without variables")
    check_guard("brute-force surplus", len(variables), guard)
    bit = {v: 1 << i for i, v in enumerate(variables)}
    clause_masks = []
    for clause, mult in F.items():
        mask = 0
        for lit in clause:
            mask |= bit[abs(lit)]
        if mask:
            clause_masks.append((mask, mult))
    n = len(variables)
    values = []
    for subset in range(1, 1 << n):
        c = sum(m for mask, m in clause_masks if mask & subset)
        values.append(c - bin(subset).count("1"))
    best = min(values)
    minimizers = [s + 1 for s, val in enumerate(values) if val == best]

    def members(subset):
        return tuple(v for v in variables if bit[v] & subset)

    witness = min(members(s) for s in minimizers)
    first = bit[witness[0]]
    union = 0
    for s in minimizers:
        if best <= 0 or s & first:
            union |= s
    if values[union - 1] != best:
        raise TheoryViolation("union of intersecting surplus minimizers is not a minimizer")
    local = {}
    for v in variables:
        local[v] = min(val for s, val in enumerate(values, start=1) if s & bit[v])
    return SurplusCertificate(best, frozenset(witness), frozenset(members(union)), local)


def all_surplus_minimizers(F, guard=BRUTE_GUARD):
    """Every non-empty V with delta(F[V]) = surp(F)."""
    variables = sorted(F.variables)
    check_guard("brute-force surplus", len(variables), guard)
    found = []
    best = None
    for V in _subsets(variables):
        d = restrict(F, V).deficiency
        if best is None or d < best:
            best, found = d, [frozenset(V)]
        elif d == best:
            found.append(frozenset(V))
    return found


def _projections(F, V):
    # (pos_mask, neg_mask, multiplicity) of every clause touching V, with the
    # first variable of V as the most significant pattern bit
    s = len(V)
    bit = {v: 1 << (s - 1 - j) for j, v in enumerate(V)}
    out = []
    for clause, mult in F.items():
        pos = neg = 0
        for lit in clause:
            b = bit.get(abs(lit))
            if b is None:
                continue
            if lit > 0:
                pos |= b
            else:
                neg |= b
        if pos | neg:
            out.append((pos, neg, mult))
    return out


def _satisfying_patterns(projections, s):
    patterns = np.arange(1 << s, dtype=np.int64)
    ok = np.ones(1 << s, dtype=bool)
    full = (1 << s) - 1
    for pos, neg, _ in projections:
        ok &= ((patterns & pos) != 0) | (((full ^ patterns) & neg) != 0)
    return np.flatnonzero(ok)


def _pattern_to_assignment(V, pattern):
    s = len(V)
    return {v: (pattern >> (s - 1 - j)) & 1 for j, v in enumerate(V)}


def brute_autarky(F, guard=BRUTE_GUARD):
    """First non-trivial autarky in canonical order, or None iff F is lean.

    Order: variable sets by size, then lexicographically, then sign patterns
    in counting order (first variable most significant, 0 before 1).
    """
    variables = sorted(F.variables)
    check_guard("autarky search", len(variables), guard)
    for V in _subsets(variables):
        hits = _satisfying_patterns(_projections(F, V), len(V))
        if len(hits):
            return _pattern_to_assignment(V, int(hits[0]))
    return None


def _has_matching(occurrences, used=frozenset()):
    # occurrences: list of candidate-variable lists, one per clause occurrence
    if not occurrences:
        return True
    first, rest = occurrences[0], occurrences[1:]
    return any(_has_matching(rest, used | {u}) for u in first if u not in used)


def brute_matching_autarky(F, guard=10):
    """First non-trivial matching autarky in canonical order, or None."""
    variables = sorted(F.variables)
    check_guard("matching-autarky search", len(variables), guard)
    for V in _subsets(variables):
        projections = _projections(F, V)
        occurrences = sum(m for _, _, m in projections)
        if occurrences > len(V):
            continue
        s = len(V)
        for pattern in _satisfying_patterns(projections, s):
            pattern = int(pattern)
            lists = []
            for pos, neg, mult in projections:
                sat = (pos & pattern) | (neg & ~pattern)
                cands = [v for j, v in enumerate(V) if sat >> (s - 1 - j) & 1]
                lists.extend([cands] * mult)
            lists.sort(key=len)
            if _has_matching(lists):
                return _pattern_to_assignment(V, pattern)
    return None


def brute_matching_lean_kernel(F, guard=10):
    while True:
        phi = brute_matching_autarky(F, guard)
        if phi is None:
            return F
        F = apply(phi, F)


def all_clauses(n):
    """Every clause over variables 1..n (including the empty clause), canonical order."""
    clauses = []
    for signs in product((0, 1, -1), repeat=n):
        clauses.append(make_clause(s * (v + 1) for v, s in enumerate(signs) if s))
    return sorted(clauses, key=clause_key)


def _transforms(n):
    for perm in permutations(range(1, n + 1)):
        for flips in product((1, -1), repeat=n):
            yield {v + 1: perm[v] * flips[v] for v in range(n)}


def _transform(F, t):
    return MultiClauseSet.from_counts({
        tuple(t[abs(lit)] * (1 if lit > 0 else -1) for lit in c): m for c, m in F.items()
    })


def _own_key(F):
    return tuple(sorted(clause_key(c) for c in F.elements()))


def canonical_form(F, n=None):
    """The isomorphic copy of F (renaming within 1..n, sign flips) with smallest key."""
    n = max(F.variables, default=0) if n is None else n
    return min((_transform(F, t) for t in _transforms(n)), key=_own_key)


def canonical_key(F, n=None):
    return _own_key(canonical_form(F, n))


def enumerate_clause_sets(n, max_clauses=None, canonical=False):
    """All clause-sets over variables 1..n with at most ``max_clauses`` clauses.

    With ``canonical`` only one representative per isomorphism class
    (variable permutations and sign flips) is produced.
    """
    check_guard("clause-set enumeration", n, ENUMERATION_GUARD)
    clauses = all_clauses(n)
    top = len(clauses) if max_clauses is None else min(max_clauses, len(clauses))
    for size in range(top + 1):
        for chosen in combinations(clauses, size):
            F = MultiClauseSet._trusted({c: 1 for c in chosen})
            if canonical and canonical_key(F, n) != _own_key(F):
                continue
            yield F


def _falsified_mask(clause, n):
    # bit a set iff the total assignment a (bit v-1 = value of v) falsifies clause
    mask = 0
    for a in range(1 << n):
        if all(((a >> (abs(lit) - 1)) & 1) != (lit > 0) for lit in clause):
            mask |= 1 << a
    return mask


def enumerate_mu(n, canonical=False):
    """All minimally unsatisfiable clause-sets with variables among 1..n.

    A clause-set is MU iff the sets of total assignments falsifying its clauses
    cover everything and each clause has an assignment falsifying it alone;
    the search builds such irredundant covers clause by clause.
    """
    check_guard("MU enumeration", n, ENUMERATION_GUARD)
    clauses = all_clauses(n)
    masks = [_falsified_mask(c, n) for c in clauses]
    full = (1 << (1 << n)) - 1
    seen = set()

    def extend(start, chosen, private, covered):
        if covered == full:
            F = MultiClauseSet._trusted({clauses[i]: 1 for i in chosen})
            if canonical:
                key = canonical_key(F, n)
                if key in seen:
                    return
                seen.add(key)
            yield F
            return
        for j in range(start, len(clauses)):
            m = masks[j]
            own = m & ~covered
            if not own:
                continue
            shrunk = [p & ~m for p in private]
            if not all(shrunk):
                continue
            yield from extend(j + 1, chosen + [j], shrunk + [own], covered | m)

    yield from extend(0, [], [], 0)


def random_clause_set(rng, n, c, max_multiplicity=1, max_length=None):
    """A random multi-clause-set over variables 1..n with about c clause occurrences."""
    max_length = n if max_length is None else min(max_length, n)
    counts = {}
    total = 0
    while total < c:
        length = rng.randint(1, max_length)
        chosen = rng.sample(range(1, n + 1), length)
        clause = make_clause(v if rng.random() < 0.5 else -v for v in chosen)
        mult = min(rng.randint(1, max_multiplicity), c - total)
        counts[clause] = counts.get(clause, 0) + mult
        total += mult
    return MultiClauseSet.from_counts(counts)
