import random

import pytest
from hypothesis import strategies as st

from cnfstruct.cnf import MultiClauseSet, make_clause


@st.composite
def clauses(draw, n=5, max_len=4):
    variables = draw(st.lists(st.integers(1, n), unique=True, max_size=max_len))
    return make_clause(v if draw(st.booleans()) else -v for v in variables)


@st.composite
def multi_clause_sets(draw, n=5, max_clauses=8, max_multiplicity=3, allow_empty=False):
    counts = {}
    for _ in range(draw(st.integers(0, max_clauses))):
        clause = draw(clauses(n))
        if not clause and not allow_empty:
            continue
        counts[clause] = counts.get(clause, 0) + draw(st.integers(1, max_multiplicity))
    return MultiClauseSet.from_counts(counts)


@pytest.fixture
def rng():
    return random.Random(20240601)


#: one (number, passed, line) entry per acceptance criterion, filled by test_acceptance
ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for _, _, line in sorted(ACCEPTANCE):
        terminalreporter.write_line(line)
