"""Complete decision procedures for small inputs: SAT, autarkies, MU, SMU, leanness."""

from dataclasses import dataclass

from .cnf import MultiClauseSet, apply, make_clause
from .errors import NotMinimallyUnsatisfiable, check_guard
from .oracle import brute_autarky

#: Default variable limit for the backtracking solver.
SOLVER_GUARD = 40

#: Default variable limit for exhaustive autarky search.
BRUTE_GUARD = 16


@dataclass(frozen=True)
class SatVerdict:
    satisfiable: bool
    model: dict = None

    def __bool__(self):
        return self.satisfiable


def _assign(clauses, lit):
    out = []
    for clause in clauses:
        if lit in clause:
            continue
        if -lit in clause:
            clause = clause - {-lit}
            if not clause:
                return None
        out.append(clause)
    return out


def _search(clauses, model, pure_literals):
    while True:
        unit = next((c for c in clauses if len(c) == 1), None)
        if unit is None:
            break
        (lit,) = unit
        model[abs(lit)] = int(lit > 0)
        clauses = _assign(clauses, lit)
        if clauses is None:
            return None
    if pure_literals:
        lits = {lit for c in clauses for lit in c}
        pure = [lit for lit in lits if -lit not in lits]
        for lit in pure:
            model[abs(lit)] = int(lit > 0)
        if pure:
            clauses = [c for c in clauses if not c & set(pure)]
    if not clauses:
        return model
    # branch on the most frequent variable among shortest clauses
    shortest = min(len(c) for c in clauses)
    tally = {}
    for c in clauses:
        if len(c) == shortest:
            for lit in c:
                tally[abs(lit)] = tally.get(abs(lit), 0) + 1
    v = min(tally, key=lambda u: (-tally[u], u))
    for lit in (v, -v):
        reduced = _assign(clauses, lit)
        if reduced is None:
            continue
        result = _search(reduced, {**model, v: int(lit > 0)}, pure_literals)
        if result is not None:
            return result
    return None


def is_satisfiable(F, guard=SOLVER_GUARD, pure_literals=False):
    """Backtracking search with unit propagation.

    Pure-literal elimination is off by default: it is itself an autarky step,
    which matters when the solver is used inside autarky experiments.
    """
    if F.has_empty_clause():
        return SatVerdict(False)
    check_guard("SAT solver", F.n, guard)
    model = _search([frozenset(c) for c in F], {}, pure_literals)
    if model is None:
        return SatVerdict(False)
    return SatVerdict(True, dict(sorted(model.items())))


def is_autarky(phi, F):
    """phi satisfies every clause it touches (the empty assignment always does)."""
    for clause in F:
        touched = False
        for lit in clause:
            value = phi.get(abs(lit))
            if value is None:
                continue
            if (value == 1) == (lit > 0):
                break
            touched = True
        else:
            if touched:
                return False
    return True


def is_mu(F, guard=SOLVER_GUARD):
    """Minimally unsatisfiable; false whenever some clause is repeated."""
    if F.max_multiplicity() > 1:
        return False
    if is_satisfiable(F, guard):
        return False
    return all(is_satisfiable(F.without(c), guard) for c in F)


def is_smu(F, guard=SOLVER_GUARD):
    """Saturated MU, decided through the splitting characterisation:
    F is MU and every {v -> e} * F is MU."""
    if not is_mu(F, guard):
        return False
    return all(is_mu(apply({v: e}, F), guard) for v in sorted(F.variables) for e in (0, 1))


def saturate(F, guard=SOLVER_GUARD, return_mapping=False):
    """Add literal occurrences to an MU clause-set until it is saturated.

    Clauses are visited in canonical order, variables ascending, positive sign
    first; a literal is added whenever the result stays unsatisfiable.  Passes
    repeat until nothing changes.  With ``return_mapping`` the list of
    (original clause, saturated clause) pairs is returned as well.
    """
    if not is_mu(F, guard):
        raise NotMinimallyUnsatisfiable("saturate needs a minimally unsatisfiable input")
    original = list(F)
    current = list(original)
    variables = sorted(F.variables)
    changed = True
    while changed:
        changed = False
        for idx in range(len(current)):
            for v in variables:
                for lit in (v, -v):
                    clause = current[idx]
                    if v in clause or -v in clause:
                        break
                    candidate = make_clause(clause + (lit,))
                    if candidate in current:
                        continue
                    trial = current[:idx] + [candidate] + current[idx + 1:]
                    if not is_satisfiable(MultiClauseSet(trial), guard):
                        current = trial
                        changed = True
                        break
    result = MultiClauseSet(current)
    if return_mapping:
        return result, list(zip(original, current))
    return result


def is_lean(F, guard=BRUTE_GUARD):
    """No non-trivial autarky (exhaustive search, exponential)."""
    return brute_autarky(F, guard) is None


def lean_kernel(F, guard=BRUTE_GUARD):
    """Apply autarkies until the clause-set is lean."""
    while True:
        phi = brute_autarky(F, guard)
        if phi is None:
            return F
        F = apply(phi, F)
