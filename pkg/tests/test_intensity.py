"""
Tests for canonical intensity relations and their validation
"""

import numpy as np
import pytest

from src.core.constants import COUNTEREXAMPLE_RANKINGS, DEFAULT_AGENT5_RANKING
from src.enumeration.relations import all_intensity_relations
from src.model.intensity import (
    Axiom, CanonicalIntensity, IncompleteIntensityError, IntensityValidationError, RankingError,
    format_ranking_line, induced_preference, intensity_from_names, intensity_from_ranking,
    object_index, object_name, ordered_pairs, pair_index, parse_ranking_line, validate_intensity
)
from src.utils.permutations import compose, inverse


def raw_map(n, positives):
    """Complete a map from its positive entries by skew-symmetry."""
    raw = {}
    for (a, b), v in positives.items():
        raw[(a, b)] = v
        raw[(b, a)] = -v
    return raw


def named(pairs):
    return {(object_index(a, 5), object_index(b, 5)): v for (a, b), v in pairs}


def test_pair_index_matches_ordered_pairs():
    """pair_index enumerates off-diagonal pairs lexicographically."""
    for n in (3, 4, 5):
        assert [pair_index(a, b, n) for a, b in ordered_pairs(n)] == list(range(n * (n - 1)))


def test_object_names():
    """Letters up to 26 objects, o<i> beyond."""
    assert object_name(0, 3) == "a"
    assert object_name(4, 5) == "e"
    assert object_name(27, 30) == "o27"
    assert object_index("c", 5) == 2
    with pytest.raises(ValueError):
        object_index("f", 5)


def test_first_column_of_five_agent_profile_is_valid():
    """Agent 1's column validates."""
    values = [(("a", "e"), 10), (("a", "d"), 9), (("b", "e"), 8), (("b", "d"), 7), (("a", "c"), 6),
              (("c", "e"), 5), (("a", "b"), 4), (("b", "c"), 3), (("c", "d"), 2), (("d", "e"), 1)]
    report = validate_intensity(raw_map(5, named(values)), 5)
    assert report.valid
    assert report.describe(5) == "valid"


def test_chain_violation_witness():
    """s(a,c) below s(a,b) breaks the chain condition at (a,b,c)."""
    report = validate_intensity(raw_map(3, {(0, 1): 2, (1, 2): 1, (0, 2): 1}), 3)
    assert not report.valid
    chain = report.of_axiom(Axiom.CHAIN)
    assert [v.witness for v in chain] == [(0, 1, 2)]


def test_strictness_violation_witness():
    """Two pairs sharing a positive value are reported together."""
    report = validate_intensity(raw_map(3, {(0, 1): 2, (1, 2): 2, (0, 2): 3}), 3)
    strict = report.of_axiom(Axiom.STRICTNESS)
    assert [v.witness for v in strict] == [((0, 1), (1, 2))]
    assert not report.of_axiom(Axiom.CHAIN)


def test_every_violation_is_reported():
    """Skew-symmetry, range and chain problems all show up in one report."""
    raw = raw_map(3, {(0, 1): 2, (1, 2): 1, (0, 2): 1})
    raw[(2, 1)] = 5
    report = validate_intensity(raw, 3)
    axioms = {v.axiom for v in report.violations}
    assert {Axiom.SKEW_SYMMETRY, Axiom.CANONICAL_RANGE, Axiom.CHAIN} <= axioms


def test_incomplete_map_is_a_distinct_error():
    """Missing pairs raise instead of producing a report."""
    raw = raw_map(3, {(0, 1): 2, (1, 2): 1})
    with pytest.raises(IncompleteIntensityError) as info:
        validate_intensity(raw, 3)
    assert str(info.value).startswith("incomplete map")
    assert set(info.value.missing) == {(0, 2), (2, 0)}


def test_from_ranking_assigns_descending_values(identical_order_profile):
    """First pair gets k, last pair gets 1, reverses get negatives."""
    s1, s2, s3 = identical_order_profile.agents
    assert s1.value(0, 2) == 3
    assert s1.value(0, 1) == 2
    assert s1.value(1, 2) == 1
    assert s2.value(1, 2) == 2
    assert s3.value(1, 2) == 1
    assert s1.value(2, 0) == -3
    assert s1.k == 3


def test_from_ranking_rejects_chain_violation():
    """(a,b) may not outrank (a,c) when a > b > c."""
    with pytest.raises(IntensityValidationError) as info:
        intensity_from_ranking([(0, 1), (0, 2), (1, 2)], 3)
    chain = info.value.report.of_axiom(Axiom.CHAIN)
    assert chain[0].witness == (0, 1, 2)


def test_from_ranking_rejects_duplicates_and_gaps():
    """Each unordered pair must appear exactly once."""
    with pytest.raises(RankingError):
        intensity_from_ranking([(0, 2), (2, 0), (1, 2)], 3)
    with pytest.raises(RankingError):
        intensity_from_ranking([(0, 2), (0, 1)], 3)
    with pytest.raises(RankingError):
        intensity_from_ranking([(0, 0), (0, 1), (1, 2)], 3)


def test_agent_five_completion():
    """The default agent-5 completion orders c > e > a > b > d with (c,e) weakest."""
    s = intensity_from_names(DEFAULT_AGENT5_RANKING, 5)
    assert s.preference().names() == ["c", "e", "a", "b", "d"]
    assert s.value(2, 4) == 1


def test_induced_preference_examples(identical_order_profile):
    """Positive values point from the better object."""
    assert str(induced_preference(identical_order_profile.agents[0])) == "a > b > c"
    third = intensity_from_names(COUNTEREXAMPLE_RANKINGS[2], 5)
    assert induced_preference(third).names() == ["a", "b", "c", "d", "e"]
    reversed_chain = intensity_from_ranking([(2, 1), (2, 0), (0, 1)], 3)
    assert induced_preference(reversed_chain).names() == ["c", "a", "b"]


@pytest.mark.parametrize("n", [3, 4])
def test_ranking_round_trip(n):
    """Reading positive pairs back reproduces the ranking for every relation."""
    for s in all_intensity_relations(n):
        assert intensity_from_ranking(s.ranking(), n) == s


@pytest.mark.parametrize("n", [3, 4])
def test_chain_holds_along_induced_order(n):
    """For a > b > c in the induced order, (a,c) beats both (a,b) and (b,c)."""
    for s in all_intensity_relations(n):
        order = s.preference().ranking
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    a, b, c = order[i], order[j], order[k]
                    assert s.value(a, c) > s.value(a, b)
                    assert s.value(a, c) > s.value(b, c)


def test_relabel_round_trip():
    """Relabeling by a permutation and then by its inverse is the identity."""
    s = intensity_from_names(COUNTEREXAMPLE_RANKINGS[0], 5)
    perm = (3, 0, 4, 1, 2)
    moved = s.relabel(perm)
    assert moved.value(perm[0], perm[4]) == s.value(0, 4)
    assert moved.relabel(inverse(perm)) == s
    assert validate_intensity(moved.to_map(), 5).valid


def test_relabel_composes():
    """Relabeling by p and then q equals relabeling by q after p."""
    s = intensity_from_names(COUNTEREXAMPLE_RANKINGS[1], 5)
    p = (3, 0, 4, 1, 2)
    q = (1, 2, 0, 4, 3)
    assert s.relabel(p).relabel(q) == s.relabel(compose(q, p))
    assert compose(p, inverse(p)) == tuple(range(5))


def test_values_are_read_only():
    """Relations are immutable after construction."""
    s = intensity_from_ranking([(0, 2), (0, 1), (1, 2)], 3)
    with pytest.raises(ValueError):
        s.values[0] = 1
    assert s == CanonicalIntensity(3, np.array(s.values))
    assert hash(s) == hash(CanonicalIntensity(3, list(s.values)))


def test_ranking_line_format():
    """Ranking lines concatenate names and join pairs with '>'."""
    s = intensity_from_ranking([(0, 2), (0, 1), (1, 2)], 3)
    assert format_ranking_line(s) == "ac>ab>bc"
    assert parse_ranking_line("ac>ab>bc", 3) == s
    with pytest.raises(RankingError):
        parse_ranking_line("ac>abc", 3)


def test_out_of_range_values_are_rejected_before_storage():
    """Values outside the int16 range are reported, not wrapped into valid ones."""
    s = intensity_from_ranking([(0, 2), (0, 1), (1, 2)], 3)
    raw = s.values.astype(np.int64) + 65536 * np.sign(s.values).astype(np.int64)
    with pytest.raises(IntensityValidationError) as info:
        CanonicalIntensity(3, raw)
    axioms = {v.axiom for v in info.value.report.violations}
    assert Axiom.CANONICAL_RANGE in axioms
    with pytest.raises(IntensityValidationError):
        CanonicalIntensity.from_map({p: int(v) for p, v in zip(ordered_pairs(3), raw)}, 3)


def test_non_integer_values_are_rejected():
    """Float input is refused instead of truncated."""
    with pytest.raises(ValueError):
        CanonicalIntensity(3, [1.5, 3.0, -1.5, 2.0, -3.0, -2.0])
