from cnfstruct.cnf import TOP, MultiClauseSet, full_clause_set, m_construction
from cnfstruct.mu import is_mu
from cnfstruct.oracle import (
    all_clauses,
    all_surplus_minimizers,
    brute_autarky,
    brute_surplus,
    canonical_key,
    enumerate_clause_sets,
    enumerate_mu,
)

import pytest
from cnfstruct.errors import GuardExceeded


def test_brute_surplus_examples():
    assert brute_surplus(full_clause_set([1, 2])).surplus == 2
    assert brute_surplus(m_construction([1, 2])).surplus == 1
    cert = brute_surplus(MultiClauseSet([[1]]))
    assert cert.surplus == 0 and cert.witness == {1}


def test_brute_surplus_witnesses():
    # {1},{2} each give 0; the union {1,2} gives 0 too
    F = MultiClauseSet([[1], [2], [-3, 4], [3, -4], [3, 4], [-3, -4]])
    cert = brute_surplus(F)
    assert cert.surplus == 0
    assert cert.witness == {1}
    assert cert.maximal_witness == {1, 2}
    assert set(all_surplus_minimizers(F)) == {frozenset({1}), frozenset({2}), frozenset({1, 2})}


def test_brute_autarky_examples():
    assert brute_autarky(MultiClauseSet([[1], [-1], [2]])) == {2: 1}
    assert brute_autarky(MultiClauseSet([[1]])) == {1: 1}
    assert brute_autarky(full_clause_set([1, 2, 3])) is None
    assert brute_autarky(MultiClauseSet([[-1]])) == {1: 0}


def test_guards():
    with pytest.raises(GuardExceeded):
        brute_surplus(full_clause_set(range(1, 6)), guard=4)
    with pytest.raises(GuardExceeded):
        list(enumerate_clause_sets(4))


def test_small_enumeration():
    found = list(enumerate_clause_sets(1, max_clauses=2))
    for F in (TOP, MultiClauseSet([[1]]), MultiClauseSet([[-1]]),
              MultiClauseSet([[1], [-1]]), MultiClauseSet([[]])):
        assert F in found
    assert len(found) == 1 + 3 + 3


def test_two_variable_count():
    assert len(all_clauses(2)) == 9
    assert sum(1 for _ in enumerate_clause_sets(2)) == 2**9
    assert sum(1 for _ in enumerate_clause_sets(2, max_clauses=2)) == 1 + 9 + 36


def test_mu_enumeration_matches_filter():
    by_filter = {F for F in enumerate_clause_sets(2) if is_mu(F)}
    assert set(enumerate_mu(2)) == by_filter
    assert len(by_filter) == 12


def test_mu_shapes_over_two_variables():
    shapes = list(enumerate_mu(2, canonical=True))
    assert len(shapes) == 5
    assert sorted((F.n, F.deficiency) for F in shapes) == [(0, 1), (1, 1), (2, 1), (2, 1), (2, 2)]
    assert canonical_key(full_clause_set([1, 2]), 2) in {canonical_key(F, 2) for F in shapes}


def test_mu_enumeration_over_three_variables():
    everything = list(enumerate_mu(3))
    assert len(everything) == 870
    assert len(set(everything)) == 870
    assert len(list(enumerate_mu(3, canonical=True))) == 44


def test_canonical_enumeration_is_isomorph_free():
    reps = list(enumerate_clause_sets(2, max_clauses=3, canonical=True))
    keys = [canonical_key(F, 2) for F in reps]
    assert len(keys) == len(set(keys))
    everything = {canonical_key(F, 2) for F in enumerate_clause_sets(2, max_clauses=3)}
    assert set(keys) == everything
