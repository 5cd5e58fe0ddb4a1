import pytest
from hypothesis import given, settings

from cnfstruct.cnf import TOP, MultiClauseSet, apply, full_clause_set, m_construction, restrict, union
from cnfstruct.matching import (
    find_matching_autarky,
    is_matching_lean,
    local_surpluses,
    matching_lean_kernel,
    saturating_matching,
    surplus,
)
from cnfstruct.mu import is_autarky
from cnfstruct.oracle import brute_matching_autarky, brute_matching_lean_kernel, brute_surplus, random_clause_set

from conftest import multi_clause_sets


def test_surplus_examples():
    A2 = surplus(full_clause_set([1, 2]))
    assert A2.surplus == 2 and A2.witness == {1, 2}
    assert surplus(MultiClauseSet([[1]])).surplus == 0
    assert surplus(m_construction([1, 2])).surplus == 1


def test_surplus_needs_variables():
    with pytest.raises(ValueError):
        surplus(TOP)
    with pytest.raises(ValueError):
        surplus(MultiClauseSet([[]]))


@settings(max_examples=150)
@given(multi_clause_sets(n=6, max_clauses=9))
def test_surplus_matches_brute_force(F):
    if F.n == 0:
        return
    fast, slow = surplus(F), brute_surplus(F)
    assert fast.surplus == slow.surplus
    assert fast.maximal_witness == slow.maximal_witness
    assert restrict(F, fast.witness).deficiency == fast.surplus
    assert fast.surplus <= F.deficiency
    assert fast.surplus <= min(len([1 for c in F.elements() if v in map(abs, c)]) for v in F.variables) - 1


def test_local_surpluses_match_brute_force(rng):
    for _ in range(40):
        F = random_clause_set(rng, 6, rng.randint(1, 10), max_multiplicity=2)
        slow = brute_surplus(F).local
        for v, (value, smallest, largest) in local_surpluses(F).items():
            assert value == slow[v]
            assert v in smallest <= largest
            assert restrict(F, smallest).deficiency == value == restrict(F, largest).deficiency


def test_matching_lean_examples():
    assert is_matching_lean(MultiClauseSet([[1], [-1]]))
    assert not is_matching_lean(MultiClauseSet([[1]]))
    assert is_matching_lean(TOP)
    assert is_matching_lean(MultiClauseSet([[]]))


def test_matching_autarky_examples():
    assert find_matching_autarky(MultiClauseSet([[1]])) == {1: 1}
    assert find_matching_autarky(MultiClauseSet([[1], [-1]])) is None
    triangle = MultiClauseSet([[1, 2], [1, 3], [2, 3]])
    phi = find_matching_autarky(triangle)
    assert set(phi) == {1, 2, 3}
    assert is_autarky(phi, triangle)
    assert apply(phi, triangle) == TOP
    assert brute_matching_autarky(triangle) is not None


def test_saturating_matching():
    F = MultiClauseSet.from_counts({(1, 2): 2, (-2, 3): 1})
    pairs = saturating_matching(F, {1, 2, 3})
    assert len(pairs) == 3 and len({v for _, v in pairs}) == 3
    assert saturating_matching(MultiClauseSet.from_counts({(1,): 2}), {1}) is None


@settings(max_examples=150)
@given(multi_clause_sets(n=5, max_clauses=8))
def test_matching_autarky_validity(F):
    phi = find_matching_autarky(F)
    lean = is_matching_lean(F)
    assert (phi is None) == (lean or F.n == 0)
    assert (brute_matching_autarky(F) is None) == lean
    if phi is not None:
        assert phi and is_autarky(phi, F)
        assert apply(phi, F) <= F
    if lean and F.n:
        assert F.deficiency >= 1


def test_kernel_examples():
    mu = full_clause_set([1, 2])
    assert matching_lean_kernel(mu) == mu
    assert matching_lean_kernel(MultiClauseSet([[1]])) == TOP
    G = MultiClauseSet([[1], [-1]])
    assert matching_lean_kernel(union(G, MultiClauseSet([[5]]))) == G
    assert matching_lean_kernel(union(m_construction([1, 2, 3]), MultiClauseSet([[4]]))) == m_construction([1, 2, 3])


@settings(max_examples=120)
@given(multi_clause_sets(n=6, max_clauses=9))
def test_kernel_properties(F):
    K = matching_lean_kernel(F)
    assert K <= F
    assert is_matching_lean(K)
    assert matching_lean_kernel(K) == K
    assert K == brute_matching_lean_kernel(F)


def test_disjoint_minimizers_with_positive_surplus():
    # {2} and {3} both reach surplus 2 but their union does not
    F = MultiClauseSet.from_counts({(-1, -2): 3, (-1, -3): 3})
    cert = surplus(F)
    assert cert.surplus == 2
    assert cert.witness == cert.maximal_witness == {2}
    assert restrict(F, {2, 3}).deficiency == 4
    assert brute_surplus(F).maximal_witness == {2}
