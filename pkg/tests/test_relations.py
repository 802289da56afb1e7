"""
Tests for preference orders, containment posets and relation enumeration
"""

from itertools import islice, permutations

import numpy as np
import pytest

from src.core.constants import RELATION_COUNTS
from src.enumeration.relations import (
    ProblemSizeError, RelationSequence, all_intensity_relations, all_preference_orders,
    containment_poset, count_linear_extensions, iter_ranking_lines, iter_relations_with_top,
    linear_extensions, relation_index, relations_per_order, sample_intensity, sample_relation
)
from src.model.intensity import (
    PreferenceOrder, format_ranking_line, intensity_from_ranking, object_index, pair_count,
    parse_ranking_line, validate_intensity
)


def order_of(names: str) -> PreferenceOrder:
    return PreferenceOrder(tuple(object_index(ch, len(names)) for ch in names))


def test_preference_order_counts():
    """n! orders in lexicographic sequence."""
    assert len(all_preference_orders(3)) == 6
    assert len(all_preference_orders(4)) == 24
    assert len(all_preference_orders(5)) == 120
    assert all_preference_orders(3)[0].ranking == (0, 1, 2)


def test_size_guard():
    """Enumerations refuse sizes outside their range."""
    with pytest.raises(ProblemSizeError):
        all_preference_orders(2)
    with pytest.raises(ProblemSizeError):
        all_preference_orders(9)
    with pytest.raises(ProblemSizeError):
        all_intensity_relations(7)


def test_poset_three_objects():
    """(a,c) sits above the two adjacent pairs, which are incomparable."""
    poset = containment_poset(order_of("abc"))
    assert poset.is_above((0, 2), (0, 1))
    assert poset.is_above((0, 2), (1, 2))
    assert not poset.comparable((0, 1), (1, 2))
    assert poset.maximal() == [(0, 2)]
    assert sorted(poset.minimal()) == [(0, 1), (1, 2)]


def test_poset_four_objects():
    """Interval containment over positions of a > b > c > d."""
    poset = containment_poset(order_of("abcd"))
    a, b, c, d = range(4)
    assert all(poset.is_above((a, d), e) for e in poset.elements if e != (a, d))
    assert poset.is_above((a, c), (a, b)) and poset.is_above((a, c), (b, c))
    assert poset.is_above((b, d), (b, c)) and poset.is_above((b, d), (c, d))
    assert not poset.comparable((a, c), (b, d))
    for p, q in [((a, b), (b, c)), ((b, c), (c, d)), ((a, b), (c, d))]:
        assert not poset.comparable(p, q)
    assert ((a, d), (a, c)) in poset.covers()
    assert ((a, d), (b, c)) not in poset.covers()


def test_adjacent_pair_is_minimal():
    """In c > e > a > b > d the pair (c,e) contains nothing."""
    poset = containment_poset(order_of("ceabd"))
    assert (2, 4) in poset.minimal()


def test_extensions_for_three_objects():
    """Exactly two relations induce a > b > c."""
    extensions = linear_extensions(containment_poset(order_of("abc")))
    assert [s.ranking() for s in extensions] == [
        [(0, 2), (0, 1), (1, 2)],
        [(0, 2), (1, 2), (0, 1)],
    ]


@pytest.mark.parametrize("n,per_order", [(3, 2), (4, 16), (5, 768)])
def test_extension_counts(n, per_order):
    """Per-order count is the same for every order and matches the DP."""
    assert relations_per_order(n) == per_order
    for order in all_preference_orders(n)[:6]:
        assert count_linear_extensions(containment_poset(order)) == per_order
    assert len(linear_extensions(containment_poset(all_preference_orders(n)[-1]))) == per_order


@pytest.mark.parametrize("n", [3, 4, 5])
def test_relation_totals(n):
    """Totals match the published counts and factor as n! times the per-order count."""
    relations = all_intensity_relations(n)
    assert len(relations) == RELATION_COUNTS[n]
    assert len(relations) == len(all_preference_orders(n)) * relations_per_order(n)
    assert len(set(relations)) == len(relations)


@pytest.mark.parametrize("n", [3, 4])
def test_enumerated_relations_validate(n):
    """Every enumerated relation passes the axioms."""
    for s in all_intensity_relations(n):
        assert validate_intensity(s.to_map(), n).valid


def test_generate_and_filter_agrees_at_three():
    """Brute force over orders and rank assignments keeps exactly the enumerated 12."""
    survivors = set()
    for order in all_preference_orders(3):
        r = order.ranking
        pairs = [(r[0], r[1]), (r[0], r[2]), (r[1], r[2])]
        for ranked in permutations(pairs):
            try:
                survivors.add(intensity_from_ranking(list(ranked), 3))
            except ValueError:
                continue
    assert survivors == set(all_intensity_relations(3))


def test_brute_force_four_objects_single_order():
    """720 rank assignments for a > b > c > d leave exactly 16 valid relations."""
    order = order_of("abcd")
    r = order.ranking
    pairs = [(r[i], r[j]) for i in range(4) for j in range(i + 1, 4)]
    valid = 0
    for ranked in permutations(pairs):
        try:
            intensity_from_ranking(list(ranked), 4)
            valid += 1
        except ValueError:
            continue
    assert valid == 16


def test_relation_index_is_stable():
    """Index positions follow the enumeration order."""
    relations = all_intensity_relations(4)
    index = relation_index(4)
    assert all(index[s] == i for i, s in enumerate(relations))


def test_relations_grouped_by_order():
    """Relations come in blocks sharing one induced order."""
    relations = all_intensity_relations(4)
    block = relations_per_order(4)
    for start in range(0, len(relations), block):
        orders = {s.preference() for s in relations[start:start + block]}
        assert len(orders) == 1


def test_relations_with_top():
    """Filtering by top choice keeps (n-1)! orders worth of relations."""
    tops = list(iter_relations_with_top(4, 3))
    assert len(tops) == 6 * 16
    assert all(s.preference().top == 3 for s in tops)


def test_sample_intensity_respects_order():
    """Sampled relations are valid and induce the requested order."""
    rng = np.random.default_rng(7)
    order = order_of("ceabd")
    for _ in range(20):
        s = sample_intensity(order, rng)
        assert s.preference() == order
        assert validate_intensity(s.to_map(), 5).valid
        assert sorted(v for v in s.values if v > 0) == list(range(1, pair_count(5) + 1))


def test_sample_relation_six_objects_is_reproducible():
    """Same seed, same relation, also beyond the enumerated sizes."""
    first = sample_relation(6, np.random.default_rng([3, 1]))
    second = sample_relation(6, np.random.default_rng([3, 1]))
    assert first == second
    assert validate_intensity(first.to_map(), 6).valid


def test_sample_intensity_covers_all_extensions():
    """Uniform sampling at n=3 hits both extensions of a > b > c."""
    rng = np.random.default_rng(11)
    order = order_of("abc")
    seen = {sample_intensity(order, rng) for _ in range(200)}
    assert seen == set(linear_extensions(containment_poset(order)))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_ranking_lines_match_relations(n):
    """Streamed ranking lines follow the enumeration order exactly."""
    expected = [format_ranking_line(s) for s in all_intensity_relations(n)]
    assert list(iter_ranking_lines(n)) == expected


@pytest.mark.slow
def test_six_objects_are_streamed():
    """n=6 relations are produced on demand instead of held in one list."""
    relations = all_intensity_relations(6)
    assert isinstance(relations, RelationSequence)
    assert len(relations) == 720 * 292_864 == 210_862_080
    assert relations.per_order == relations_per_order(6) == 292_864

    assert relations[0].preference().ranking == (0, 1, 2, 3, 4, 5)
    assert relations[292_864].preference().ranking == (0, 1, 2, 3, 5, 4)
    assert relations[-1].preference().ranking == (5, 4, 3, 2, 1, 0)
    assert validate_intensity(relations[-1].to_map(), 6).valid
    with pytest.raises(IndexError):
        relations[len(relations)]

    first = list(islice(iter(relations), 3))
    assert first == [relations[0], relations[1], relations[2]]
    lines = list(islice(iter_ranking_lines(6), 3))
    assert [parse_ranking_line(line, 6) for line in lines] == first


def test_relation_index_stops_at_five():
    """Indexing every n=6 relation in a dict is refused."""
    with pytest.raises(ProblemSizeError):
        relation_index(6)
