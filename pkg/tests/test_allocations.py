"""
Tests for allocations and Pareto efficiency
"""

import networkx as nx
import numpy as np
import pytest

from src.core.constants import COUNTEREXAMPLE_ALLOCATIONS
from src.efficiency.allocations import (
    Allocation, AllocationError, all_allocations, pareto_dominates, pareto_set
)
from src.efficiency.engine import efficiency_outcome, has_cycle, pareto_mask
from src.enumeration.profiles import profile_from_key, relation_count
from src.model.profile import Profile


def test_allocation_counts_and_order():
    """n! allocations, lexicographic."""
    assert len(all_allocations(3)) == 6
    assert len(all_allocations(5)) == 120
    assert all_allocations(3)[0].label() == "abc"
    assert [x.label() for x in all_allocations(3)] == ["abc", "acb", "bac", "bca", "cab", "cba"]


def test_allocation_must_be_bijection():
    """Two agents may not share an object."""
    with pytest.raises(AllocationError):
        Allocation((0, 0, 2))
    assert Allocation.from_label("cab") == Allocation((2, 0, 1))
    assert repr(Allocation.from_label("cab")) == "Allocation(cab)"


def test_allocation_actions():
    """Object renaming maps holdings; agent permutation reorders them."""
    x = Allocation.from_label("abc")
    assert x.relabel([2, 0, 1]).label() == "cab"
    assert x.permute_agents([2, 0, 1]).label() == "cab"


def test_all_six_pareto_efficient(identical_order_profile):
    """With identical preferences every allocation is Pareto efficient."""
    assert pareto_set(identical_order_profile) == set(all_allocations(3))


def test_swap_between_agents_is_not_a_pareto_improvement(five_agent_profile):
    """Agents 2 and 3 swapping b and c helps one and hurts the other."""
    x = Allocation.from_label("abcde")
    y = Allocation.from_label("acbde")
    assert not pareto_dominates(x, y, five_agent_profile)
    assert not pareto_dominates(y, x, five_agent_profile)


def test_pareto_improvement_example():
    """(a,b,c) improves on (a,c,b) when agent 2 prefers b and agent 3 prefers c."""
    profile = Profile.from_rankings([
        [("a", "b"), ("a", "c"), ("c", "b")],
        [("a", "c"), ("a", "b"), ("b", "c")],
        [("a", "b"), ("c", "b"), ("a", "c")],
    ], 3)
    better = Allocation.from_label("abc")
    worse = Allocation.from_label("acb")
    assert pareto_dominates(better, worse, profile)
    assert worse not in pareto_set(profile)


def test_no_self_domination(identical_order_profile):
    """x never Pareto-dominates itself."""
    for x in all_allocations(3):
        assert not pareto_dominates(x, x, identical_order_profile)


def test_distinct_tops_allocation_is_efficient():
    """Giving everyone their distinct top choice cannot be improved."""
    profile = Profile.from_rankings([
        [("a", "c"), ("a", "b"), ("b", "c")],
        [("b", "c"), ("b", "a"), ("a", "c")],
        [("c", "a"), ("c", "b"), ("b", "a")],
    ], 3)
    assert pareto_set(profile) == {Allocation.from_label("abc")}


def test_five_agent_pareto_set(five_agent_profile):
    """The listed six are efficient; the full set has 18 members."""
    efficient = pareto_set(five_agent_profile)
    assert {Allocation.from_label(v) for v in COUNTEREXAMPLE_ALLOCATIONS.values()} <= efficient
    assert len(efficient) == 18


@pytest.mark.parametrize("n", [3, 4, 5])
def test_engine_pareto_mask_matches_brute_force(n):
    """The vectorized mask agrees with pairwise checks."""
    rng = np.random.default_rng(n)
    for _ in range(15):
        key = tuple(int(v) for v in rng.integers(relation_count(n), size=n))
        profile = profile_from_key(n, key)
        mask = pareto_mask(profile)
        expected = pareto_set(profile)
        assert {x for x, keep in zip(all_allocations(n), mask) if keep} == expected
        assert efficiency_outcome(profile).pareto_count == len(expected)


@pytest.mark.parametrize("edges,expected", [
    ([], False),
    ([(0, 1), (1, 2), (0, 2)], False),
    ([(0, 1), (1, 2), (2, 0)], True),
    ([(5, 0), (0, 1), (1, 2), (2, 0), (2, 7)], True),
    ([(3, 4), (4, 5), (6, 4), (1, 3)], False),
])
def test_has_cycle(edges, expected):
    """Source peeling finds cycles, including ones reached from acyclic tails."""
    assert has_cycle(np.array(edges, dtype=np.int64).reshape(-1, 2)) is expected


def test_has_cycle_matches_networkx():
    """Random small digraphs agree with networkx."""
    rng = np.random.default_rng(17)
    for _ in range(300):
        edges = rng.integers(8, size=(int(rng.integers(1, 12)), 2))
        edges = edges[edges[:, 0] != edges[:, 1]]
        graph = nx.DiGraph()
        graph.add_edges_from(map(tuple, edges.tolist()))
        assert has_cycle(edges) == (not nx.is_directed_acyclic_graph(graph))


def test_five_agent_outcome_is_cyclic(five_agent_profile):
    outcome = efficiency_outcome(five_agent_profile)
    assert outcome.cyclic
    assert outcome.efficient_count == 0
