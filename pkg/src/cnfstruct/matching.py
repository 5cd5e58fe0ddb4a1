"""Surplus, matching autarkies and the matching-lean kernel.

For a fixed variable v, the minimum of delta(F[V]) over V containing v is a
minimum cut: source -> u (capacity 1) for u != v, source -> v (unbounded),
u -> clause (unbounded) when u occurs in the clause, clause -> sink
(capacity = multiplicity).  A cut with variable set V on the source side has
to take every clause touching V along, so its value is n(F) + delta(F[V]).
"""

from dataclasses import dataclass, field

from .cnf import apply, restrict
from .errors import TheoryViolation
from .flow import FlowNetwork


@dataclass(frozen=True)
class SurplusCertificate:
    """surplus = min delta(F[V]) over non-empty V, with minimizing sets.

    ``witness`` is the smallest minimizer containing the first variable that
    attains the minimum, ``maximal_witness`` the largest one.  For surplus <= 0
    the latter is the union of all minimizers; for surplus >= 1 minimizers
    are closed under union only when they intersect, so distinct maximal
    minimizers are disjoint and the one containing ``witness`` is reported.
    ``local`` maps every variable v to min{delta(F[V]) : v in V}.
    """

    surplus: int
    witness: frozenset
    maximal_witness: frozenset
    local: dict = field(default_factory=dict, compare=False)
    local_minimal: dict = field(default_factory=dict, compare=False, repr=False)


def _local_cut(F, v, clauses, index):
    n = F.n
    big = F.c + n + 1
    s, t = 0, 1
    net = FlowNetwork(2 + n + len(clauses))
    for u, node in index.items():
        net.add_edge(s, node, big if u == v else 1)
    for j, (clause, mult) in enumerate(clauses):
        cnode = 2 + n + j
        for lit in clause:
            net.add_edge(index[abs(lit)], cnode, big)
        net.add_edge(cnode, t, mult)
    value = net.max_flow(s, t) - n
    variables = list(index)
    smallest = net.reachable_from(s)
    co = net.reaching(t)
    minimal = frozenset(u for u in variables if index[u] in smallest)
    maximal = frozenset(u for u in variables if index[u] not in co)
    return value, minimal, maximal


def local_surpluses(F):
    """For each variable v: (min delta(F[V]) over V ∋ v, smallest and largest such V)."""
    variables = sorted(F.variables)
    index = {u: 2 + i for i, u in enumerate(variables)}
    clauses = [(c, m) for c, m in F.items() if c]
    return {v: _local_cut(F, v, clauses, index) for v in variables}


def surplus(F):
    """Exact surplus via one min cut per variable."""
    if F.n == 0:
        raise ValueError("surplus is undefined for a clause-set without variables")
    local = local_surpluses(F)
    best = min(value for value, _, _ in local.values())
    attaining = [v for v in sorted(local) if local[v][0] == best]
    witness = local[attaining[0]][1]
    if best <= 0:
        maximal = frozenset().union(*(local[v][2] for v in attaining))
    else:
        maximal = local[attaining[0]][2]
    if restrict(F, maximal).deficiency != best or restrict(F, witness).deficiency != best:
        raise TheoryViolation("surplus witness does not attain the minimum")
    return SurplusCertificate(
        best,
        witness,
        maximal,
        {v: local[v][0] for v in local},
        {v: local[v][1] for v in local},
    )


def is_matching_lean(F):
    """No non-trivial matching autarky; vacuously true without variables."""
    if F.n == 0:
        return True
    return surplus(F).surplus >= 1


def saturating_matching(F, V):
    """Match every clause occurrence touching V to its own variable of V.

    Returns a list of (clause, variable) pairs, one per occurrence, or None if
    no such matching exists.
    """
    V = sorted(V)
    index = {u: 2 + i for i, u in enumerate(V)}
    touching = [(c, m) for c, m in F.items() if any(abs(lit) in index for lit in c)]
    s, t = 0, 1
    net = FlowNetwork(2 + len(V) + len(touching))
    edges = []
    for j, (clause, mult) in enumerate(touching):
        cnode = 2 + len(V) + j
        net.add_edge(s, cnode, mult)
        for lit in clause:
            if abs(lit) in index:
                edges.append((clause, abs(lit), net.add_edge(cnode, index[abs(lit)], 1)))
    for node in index.values():
        net.add_edge(node, t, 1)
    need = sum(m for _, m in touching)
    if net.max_flow(s, t) != need:
        return None
    return [(clause, u) for clause, u, e in edges if net.flow_on(e)]


def find_matching_autarky(F):
    """A non-trivial matching autarky, or None if F is matching lean.

    The autarky lives on the maximal surplus minimizer V*; matched variables
    satisfy their clause, unmatched variables of V* are set to 1.
    """
    if F.n == 0:
        return None
    cert = surplus(F)
    if cert.surplus >= 1:
        return None
    V = cert.maximal_witness
    matching = saturating_matching(F, V)
    if matching is None:
        raise TheoryViolation("no saturating matching on the maximal surplus minimizer")
    phi = {u: 1 for u in V}
    for clause, u in matching:
        phi[u] = 1 if u in clause else 0
    return dict(sorted(phi.items()))


def matching_lean_kernel(F):
    """Apply matching autarkies until none is left."""
    while True:
        phi = find_matching_autarky(F)
        if phi is None:
            return F
        F = apply(phi, F)
