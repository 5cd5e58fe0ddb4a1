"""The min-var-degree bounds as executable certificates.

``certify`` turns the bound minvdeg(F) <= nm(surp(F)) for lean F into a
constructive dichotomy: every input with at least one variable yields either
a variable of low degree or a non-trivial autarky.
"""

from dataclasses import dataclass
from itertools import combinations

from .cnf import MultiClauseSet, degrees, m_clauses, m_construction, make_clause, restrict, union
from .errors import NotMinimallyUnsatisfiable, TheoryViolation, check_guard
from .matching import find_matching_autarky, is_matching_lean, surplus
from .mu import BRUTE_GUARD, SOLVER_GUARD, is_autarky, is_lean, is_mu, is_satisfiable
from .nonmersenne import nm1, nm_closed as nm

#: Limit for the brute-force check of the unique-minimizer condition.
SUBSET_GUARD = 16


@dataclass(frozen=True)
class VariableRecord:
    variable: int
    vdeg: int
    ldeg_pos: int
    ldeg_neg: int

    def as_dict(self):
        return {"variable": self.variable, "vdeg": self.vdeg,
                "ldeg_pos": self.ldeg_pos, "ldeg_neg": self.ldeg_neg}


def _record(table, v):
    return VariableRecord(v, table.vdeg(v), table.ldeg(v), table.ldeg(-v))


def pick_witness(table, vdeg_bound, ldeg_bound):
    """Deterministic low-degree variable and whether it meets the ldeg bound.

    Minimum-vdeg variables come first (smallest id, preferring the ones with
    both literal degrees <= ldeg_bound); failing a strong one there, any
    variable with vdeg <= vdeg_bound and both literal degrees <= ldeg_bound.
    """
    minimal = table.min_vdeg_variables
    for v in minimal:
        if table.ldeg(v) <= ldeg_bound and table.ldeg(-v) <= ldeg_bound:
            return _record(table, v), True
    strong = [v for v in table.variables
              if table.vdeg(v) <= vdeg_bound
              and table.ldeg(v) <= ldeg_bound and table.ldeg(-v) <= ldeg_bound]
    if strong:
        v = min(strong, key=lambda u: (table.vdeg(u), u))
        return _record(table, v), True
    return _record(table, minimal[0]), False


@dataclass(frozen=True)
class MuBoundCheck:
    holds: bool
    witness: VariableRecord
    strong_witness: bool
    deficiency: int
    bound: int
    minvdeg: int


def _mu_bound(F, bound_fn, guard):
    if F.n == 0:
        raise ValueError("the degree bound needs at least one variable")
    if not is_mu(F, guard):
        raise NotMinimallyUnsatisfiable("input is not minimally unsatisfiable")
    k = F.deficiency
    if k < 1:
        raise TheoryViolation(f"MU clause-set with deficiency {k}")
    bound = bound_fn(k)
    table = degrees(F)
    witness, strong = pick_witness(table, bound, k)
    return MuBoundCheck(table.minvdeg <= bound, witness, strong, k, bound, table.minvdeg)


def check_mu_bound(F, guard=SOLVER_GUARD):
    """minvdeg(F) <= nm(delta(F)) for MU F, with a variable of low literal degrees.

    ``holds`` false (or no strong witness) on MU input would mean a bug.
    """
    return _mu_bound(F, nm, guard)


def check_mu_bound_strict(F, guard=SOLVER_GUARD):
    """The sharper MU bound minvdeg(F) <= nm_1(delta(F))."""
    return _mu_bound(F, nm1, guard)


@dataclass(frozen=True)
class CertificationVerdict:
    """Outcome of :func:`certify`.

    kind is ``"witness_variable"`` (with ``witness`` and ``strong_witness``)
    or ``"autarky"`` / ``"matching_autarky"`` (with ``autarky``).
    """

    kind: str
    surplus_used: object
    bound: int = None
    minvdeg: int = None
    witness: VariableRecord = None
    strong_witness: bool = False
    autarky: dict = None

    def as_dict(self):
        out = {
            "kind": self.kind,
            "surplus": self.surplus_used.surplus,
            "surplus_witness": sorted(self.surplus_used.witness),
            "bound": self.bound,
            "minvdeg": self.minvdeg,
        }
        if self.kind == "witness_variable":
            out["witness"] = self.witness.as_dict()
            out["strong_witness"] = self.strong_witness
        else:
            out["autarky"] = {str(v): e for v, e in sorted(self.autarky.items())}
        return out


def certify(F, guard=SOLVER_GUARD):
    """Low-degree variable or non-trivial autarky.

    (a) surplus <= 0: a matching autarky.  (b) minvdeg <= nm(surplus): the
    witness variable.  (c) otherwise the restriction to the maximal surplus
    minimizer V is satisfiable, and a model on V is an autarky for F.
    Every returned claim is re-verified.
    """
    if F.n == 0:
        raise ValueError("certify needs at least one variable")
    cert = surplus(F)
    table = degrees(F)
    s = cert.surplus
    if s <= 0:
        phi = find_matching_autarky(F)
        verdict = CertificationVerdict("matching_autarky", cert, None, table.minvdeg, autarky=phi)
    else:
        bound = nm(s)
        if table.minvdeg <= bound:
            witness, strong = pick_witness(table, bound, s)
            if witness.vdeg > bound:
                raise TheoryViolation("witness variable exceeds the bound")
            return CertificationVerdict("witness_variable", cert, bound, table.minvdeg, witness, strong)
        V = cert.maximal_witness
        result = is_satisfiable(restrict(F, V), guard)
        if not result:
            raise TheoryViolation(
                "restriction to a surplus minimizer is unsatisfiable although minvdeg > nm(surplus)")
        phi = {v: result.model.get(v, 1) for v in sorted(V)}
        verdict = CertificationVerdict("autarky", cert, bound, table.minvdeg, autarky=phi)
    if not verdict.autarky or not is_autarky(verdict.autarky, F):
        raise TheoryViolation(f"certified assignment is not a non-trivial autarky: {verdict.autarky}")
    return verdict


@dataclass(frozen=True)
class MlcrCheck:
    """Conditions are None when not evaluated: no variables, or (for the
    degree condition) surplus <= 0, where nm is undefined."""

    matching_lean: bool
    unique_minimizer: bool
    degree_exceeds_bound: bool

    def __bool__(self):
        return bool(self.matching_lean and self.unique_minimizer and self.degree_exceeds_bound)


def _unique_minimizer_flow(F, cert):
    # var(F) is the only minimizer iff it is a minimizer and, for each v, the
    # smallest minimizer containing v is already all of var(F)
    everything = frozenset(F.variables)
    if cert.maximal_witness != everything:
        return False
    return all(cert.local_minimal[v] == everything for v in everything)


def _unique_minimizer_brute(F, s, guard):
    variables = sorted(F.variables)
    check_guard("unique-minimizer check", len(variables), guard)
    for size in range(1, len(variables)):
        for V in combinations(variables, size):
            if restrict(F, V).deficiency == s:
                return False
    return F.deficiency == s


def mlcr_conditions(F, method="flow", guard=SUBSET_GUARD):
    """The three membership conditions of the matching-lean critical class."""
    if F.n == 0:
        return MlcrCheck(False, None, None)
    cond1 = not F.has_empty_clause() and is_matching_lean(F)
    cert = surplus(F)
    if method == "flow":
        cond2 = _unique_minimizer_flow(F, cert)
    elif method == "brute":
        cond2 = _unique_minimizer_brute(F, cert.surplus, guard)
    else:
        raise ValueError(f"unknown method {method!r}")
    cond3 = degrees(F).minvdeg > nm(cert.surplus) if cert.surplus >= 1 else None
    return MlcrCheck(cond1, cond2, cond3)


def is_mlcr(F, method="flow", guard=SUBSET_GUARD):
    return bool(mlcr_conditions(F, method, guard))


def _fresh_copy(variables, offset):
    return {v: offset + i for i, v in enumerate(sorted(variables), start=1)}


def construct_high_degree_mlean(k, K, G=None):
    """Matching-lean clause-set of deficiency k whose positive literal degrees are all >= K.

    k = 1 gives M(v_1..v_K).  For k >= 2, with G matching lean of deficiency
    k - 1 and n(G) >= K: F = G + {C_i ∪ C_i'} pairing the clauses of M(var(G))
    with those of M over a fresh copy of var(G).
    """
    if k < 1 or K < 1:
        raise ValueError("k and K must be positive")
    if k == 1:
        return m_construction(range(1, K + 1))
    if G is None:
        G = _default_base(k - 1, K)
    else:
        if G.deficiency != k - 1:
            raise ValueError(f"G must have deficiency {k - 1}, has {G.deficiency}")
        if G.n < K:
            raise ValueError(f"G needs at least {K} variables, has {G.n}")
        if not is_matching_lean(G):
            raise ValueError("G must be matching lean")
    V = sorted(G.variables)
    copy = _fresh_copy(V, max(V))
    left = m_clauses(V)
    right = [tuple((1 if lit > 0 else -1) * copy[abs(lit)] for lit in c) for c in left]
    joined = MultiClauseSet(make_clause(a + b) for a, b in zip(left, right))
    return union(G, joined)


def _default_base(k, K):
    # deficiency-k matching-lean instance with at least K variables
    if k == 1:
        return m_construction(range(1, max(K, 2) + 1))
    return construct_high_degree_mlean(k, K, _default_base(k - 1, K))


@dataclass(frozen=True)
class CharSurp1Check:
    surplus: int
    minvdeg: int
    violations: tuple

    @property
    def ok(self):
        return not self.violations


def cor_charsurp1_checks(F, guard=BRUTE_GUARD, verify_lean=True):
    """For lean F: surplus 1 iff minvdeg 2, and minvdeg 3 implies surplus 2.

    Raises TheoryViolation listing any failed implication.
    """
    if F.n == 0:
        raise ValueError("needs at least one variable")
    if verify_lean and not is_lean(F, guard):
        raise ValueError("input is not lean")
    s = surplus(F).surplus
    d = degrees(F).minvdeg
    violations = []
    if s == 1 and d != 2:
        violations.append("surplus 1 but minvdeg != 2")
    if d == 2 and s != 1:
        violations.append("minvdeg 2 but surplus != 1")
    if d == 3 and s != 2:
        violations.append("minvdeg 3 but surplus != 2")
    result = CharSurp1Check(s, d, tuple(violations))
    if violations:
        raise TheoryViolation("; ".join(violations))
    return result


def lean_bound_check(F, guard=BRUTE_GUARD, verify_lean=True):
    """minvdeg(F) <= nm(surp(F)) plus a variable with both ldegs <= surp(F), for lean F.

    Returns (holds, witness record, strong flag).
    """
    if F.n == 0:
        raise ValueError("needs at least one variable")
    if verify_lean and not is_lean(F, guard):
        raise ValueError("input is not lean")
    s = surplus(F).surplus
    bound = nm(s)
    table = degrees(F)
    witness, strong = pick_witness(table, bound, s)
    return table.minvdeg <= bound, witness, strong

