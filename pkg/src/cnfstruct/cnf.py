"""Multi-clause-sets over boolean variables and their elementary operations.

Literals are non-zero integers in the DIMACS convention (``v`` / ``-v``).  A
clause is stored canonically as a tuple of literals sorted by variable, so
clause identity is structural.  A :class:`MultiClauseSet` maps clauses to
positive multiplicities and is immutable.
"""

from collections import Counter
from dataclasses import dataclass
from itertools import combinations, product

from .errors import DimacsError, check_guard

#: Default limit on |V| for building the full clause-set A(V).
FULL_CLAUSE_GUARD = 20


def literal_key(lit):
    return (abs(lit), lit < 0)


def make_clause(literals):
    """Canonical clause from an iterable of literals.

    Duplicate literals collapse; a literal together with its complement is
    rejected since clauses are clash-free.
    """
    lits = set()
    for lit in literals:
        lit = int(lit)
        if lit == 0:
            raise ValueError("0 is not a literal")
        lits.add(lit)
    for lit in lits:
        if -lit in lits:
            raise ValueError(f"clause clashes in variable {abs(lit)}")
    return tuple(sorted(lits, key=literal_key))


def clause_key(clause):
    return tuple(literal_key(lit) for lit in clause)


def clause_variables(clause):
    return frozenset(abs(lit) for lit in clause)


class MultiClauseSet:
    """A finite set of clauses with positive multiplicities.

    Accepts an iterable of clauses (each an iterable of literals); repeated
    clauses accumulate multiplicity.  Use :meth:`from_counts` to pass
    multiplicities explicitly.
    """

    __slots__ = ("_counts", "_vars", "_c")

    def __init__(self, clauses=()):
        counts = Counter(make_clause(c) for c in clauses)
        self._init(counts)

    def _init(self, counts):
        ordered = sorted(counts, key=clause_key)
        self._counts = {c: counts[c] for c in ordered}
        self._vars = frozenset(abs(lit) for c in ordered for lit in c)
        self._c = sum(self._counts.values())

    @classmethod
    def from_counts(cls, counts):
        merged = Counter()
        for clause, mult in dict(counts).items():
            if mult < 1:
                raise ValueError(f"multiplicity must be positive, got {mult}")
            merged[make_clause(clause)] += int(mult)
        obj = cls.__new__(cls)
        obj._init(merged)
        return obj

    @classmethod
    def _trusted(cls, counts):
        # counts: canonical clauses -> positive multiplicities
        obj = cls.__new__(cls)
        obj._init(counts)
        return obj

    @property
    def n(self):
        """Number of occurring variables."""
        return len(self._vars)

    @property
    def c(self):
        """Number of clauses, counting multiplicities."""
        return self._c

    @property
    def deficiency(self):
        return self._c - len(self._vars)

    @property
    def variables(self):
        return self._vars

    @property
    def clauses(self):
        """Distinct clauses in canonical order."""
        return tuple(self._counts)

    def items(self):
        return self._counts.items()

    def multiplicity(self, clause):
        return self._counts.get(make_clause(clause), 0)

    def elements(self):
        """Clauses in canonical order, each repeated per multiplicity."""
        for clause, mult in self._counts.items():
            for _ in range(mult):
                yield clause

    def counts(self):
        return dict(self._counts)

    def max_multiplicity(self):
        return max(self._counts.values(), default=0)

    def has_empty_clause(self):
        return () in self._counts

    def is_top(self):
        return not self._counts

    def __iter__(self):
        return iter(self._counts)

    def __len__(self):
        return len(self._counts)

    def __contains__(self, clause):
        return make_clause(clause) in self._counts

    def __eq__(self, other):
        if not isinstance(other, MultiClauseSet):
            return NotImplemented
        return self._counts == other._counts

    def __hash__(self):
        return hash(tuple(self._counts.items()))

    def __le__(self, other):
        """Sub-multiset relation."""
        return all(other._counts.get(c, 0) >= m for c, m in self._counts.items())

    def __add__(self, other):
        """Multiset sum (multiplicities add)."""
        counts = Counter(self._counts)
        counts.update(other._counts)
        return MultiClauseSet._trusted(counts)

    def without(self, clause, count=1):
        """Remove ``count`` copies of ``clause`` (all copies if count is None)."""
        clause = make_clause(clause)
        counts = dict(self._counts)
        if clause not in counts:
            raise KeyError(clause)
        left = 0 if count is None else counts[clause] - count
        if left < 0:
            raise ValueError("removing more copies than present")
        if left:
            counts[clause] = left
        else:
            del counts[clause]
        return MultiClauseSet._trusted(counts)

    def to_clause_set(self):
        """Underlying clause-set (every multiplicity set to 1)."""
        return MultiClauseSet._trusted({c: 1 for c in self._counts})

    def rename(self, mapping):
        """Rename variables by ``mapping`` (variables not in it are kept)."""
        counts = Counter()
        for clause, mult in self._counts.items():
            new = make_clause((1 if lit > 0 else -1) * mapping.get(abs(lit), abs(lit)) for lit in clause)
            counts[new] += mult
        return MultiClauseSet._trusted(counts)

    def __repr__(self):
        parts = []
        for clause, mult in self._counts.items():
            text = "{" + ",".join(map(str, clause)) + "}"
            parts.append(text if mult == 1 else f"{text}x{mult}")
        return "MultiClauseSet(" + " ".join(parts) + ")"


TOP = MultiClauseSet()


def apply(phi, F):
    """phi * F: drop satisfied clauses, delete falsified literals.

    Clauses shortened to the same result have their multiplicities added.
    """
    counts = Counter()
    for clause, mult in F.items():
        kept = []
        satisfied = False
        for lit in clause:
            value = phi.get(abs(lit))
            if value is None:
                kept.append(lit)
            elif (value == 1) == (lit > 0):
                satisfied = True
                break
        if not satisfied:
            counts[tuple(kept)] += mult
    return MultiClauseSet._trusted(counts)


def restrict(F, V):
    """F[V]: clauses touching V, projected onto V (multiplicities may merge)."""
    V = frozenset(V)
    counts = Counter()
    for clause, mult in F.items():
        kept = tuple(lit for lit in clause if abs(lit) in V)
        if kept:
            counts[kept] += mult
    return MultiClauseSet._trusted(counts)


def union(*sets):
    """Multiset sum of several multi-clause-sets."""
    counts = Counter()
    for F in sets:
        counts.update(dict(F.items()))
    return MultiClauseSet._trusted(counts)


@dataclass(frozen=True)
class DegreeTable:
    """Literal and variable degrees, counting multiplicities."""

    positive: dict
    negative: dict

    def ldeg(self, lit):
        table = self.positive if lit > 0 else self.negative
        return table.get(abs(lit), 0)

    def vdeg(self, v):
        return self.positive.get(v, 0) + self.negative.get(v, 0)

    @property
    def variables(self):
        return sorted(self.positive)

    @property
    def minvdeg(self):
        return min((self.vdeg(v) for v in self.positive), default=None)

    @property
    def minldeg(self):
        return min((min(self.positive[v], self.negative[v]) for v in self.positive), default=None)

    @property
    def min_vdeg_variables(self):
        m = self.minvdeg
        return [v for v in self.variables if self.vdeg(v) == m]

    @property
    def singular_variables(self):
        return [v for v in self.variables if 1 in (self.positive[v], self.negative[v])]

    @property
    def non_singular(self):
        return not self.singular_variables


def degrees(F):
    pos = {v: 0 for v in F.variables}
    neg = dict(pos)
    for clause, mult in F.items():
        for lit in clause:
            if lit > 0:
                pos[lit] += mult
            else:
                neg[-lit] += mult
    return DegreeTable(dict(sorted(pos.items())), dict(sorted(neg.items())))


def full_clause_set(V, guard=FULL_CLAUSE_GUARD):
    """A(V): all 2^|V| full clauses over V."""
    V = sorted(set(V))
    check_guard("full clause-set", len(V), guard)
    return MultiClauseSet(
        [s * v for s, v in zip(signs, V)] for signs in product((1, -1), repeat=len(V))
    )


def m_clauses(V):
    """The clauses of M(V) in construction order: all-positive, then v_j negated."""
    V = sorted(set(V))
    if not V:
        raise ValueError("M(V) needs at least one variable")
    result = [tuple(V)]
    for j in range(len(V)):
        result.append(make_clause(-v if i == j else v for i, v in enumerate(V)))
    return result


def m_construction(V):
    """M(V): full clauses over V with at most one complemented literal."""
    return MultiClauseSet(m_clauses(V))


def is_hitting(F):
    """Every two distinct clauses clash; a repeated clause never does."""
    if F.max_multiplicity() > 1:
        return False
    clauses = [frozenset(c) for c in F]
    for a, b in combinations(clauses, 2):
        if not any(-lit in b for lit in a):
            return False
    return True


class VariableNames:
    """Interns external variable labels as dense positive integers."""

    def __init__(self):
        self._ids = {}
        self._labels = []

    def __getitem__(self, label):
        if label not in self._ids:
            self._labels.append(label)
            self._ids[label] = len(self._labels)
        return self._ids[label]

    def label(self, var):
        return self._labels[var - 1]

    def literal(self, text):
        """``"a"`` -> +id(a), ``"-a"`` -> -id(a)."""
        if text.startswith("-"):
            return -self[text[1:]]
        return self[text]

    def clause_set(self, clauses):
        return MultiClauseSet([self.literal(t) for t in c] for c in clauses)

    def __len__(self):
        return len(self._labels)


def parse_dimacs(text):
    """Parse DIMACS CNF text (str or bytes) into a MultiClauseSet.

    Clauses are 0-terminated token streams and may span lines.  Repeated
    clauses accumulate multiplicity.  The header's variable count bounds the
    variable indices but does not define n(F).
    """
    if isinstance(text, (bytes, bytearray)):
        text = text.decode("utf-8")
    header = None
    counts = Counter()
    current = []
    current_line = None
    n_clauses = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            if header is not None:
                raise DimacsError("duplicate header", lineno)
            fields = line.split()
            if len(fields) != 4 or fields[0] != "p" or fields[1] != "cnf":
                raise DimacsError(f"malformed header {line!r}", lineno)
            try:
                header = (int(fields[2]), int(fields[3]))
            except ValueError:
                raise DimacsError(f"malformed header {line!r}", lineno) from None
            if header[0] < 0 or header[1] < 0:
                raise DimacsError(f"malformed header {line!r}", lineno)
            continue
        if header is None:
            raise DimacsError("clause before header", lineno)
        for token in line.split():
            try:
                lit = int(token)
            except ValueError:
                raise DimacsError(f"bad literal {token!r}", lineno) from None
            if lit == 0:
                if token.lstrip("+-") != token:
                    raise DimacsError(f"literal index 0 ({token!r})", lineno)
                try:
                    clause = make_clause(current)
                except ValueError as exc:
                    raise DimacsError(str(exc), current_line or lineno) from None
                counts[clause] += 1
                n_clauses += 1
                current = []
                current_line = None
                continue
            if abs(lit) > header[0]:
                raise DimacsError(f"variable {abs(lit)} exceeds header bound {header[0]}", lineno)
            if current_line is None:
                current_line = lineno
            current.append(lit)
    if header is None:
        raise DimacsError("missing header")
    if current:
        raise DimacsError("last clause not terminated by 0", current_line)
    if n_clauses != header[1]:
        raise DimacsError(f"header announces {header[1]} clauses, found {n_clauses}")
    return MultiClauseSet._trusted(counts)


def serialize_dimacs(F, comments=()):
    """Deterministic DIMACS text: sorted clauses, each repeated per multiplicity."""
    lines = [f"c {c}" for c in comments]
    lines.append(f"p cnf {max(F.variables, default=0)} {F.c}")
    for clause in F.elements():
        lines.append(" ".join(map(str, clause + (0,))))
    return "\n".join(lines) + "\n"


def read_dimacs(path):
    with open(path, "rb") as fh:
        return parse_dimacs(fh.read())


def write_dimacs(F, path):
    with open(path, "w") as fh:
        fh.write(serialize_dimacs(F))


def canonical_text(F):
    """One clause per line (sorted), multiplicity suffix ``*m`` when m > 1."""
    out = []
    for clause, mult in F.items():
        body = " ".join(map(str, clause)) if clause else "[]"
        out.append(body if mult == 1 else f"{body} *{mult}")
    return "\n".join(out) + ("\n" if out else "")
