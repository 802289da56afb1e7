"""
Intensity Efficiency - Relation Enumeration
Preference orders, containment posets and their linear extensions
"""

from collections.abc import Sequence
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple

import numpy as np

from src.core.constants import (
    MAX_CACHED_RELATION_SIZE, MAX_ORDER_SIZE, MAX_RELATION_SIZE, MIN_PROBLEM_SIZE
)
from src.core.logger import get_logger
from src.model.intensity import (
    CanonicalIntensity, OrderedPair, PreferenceOrder, object_name, pair_index
)
from src.utils.permutations import all_permutations


class ProblemSizeError(ValueError):
    """n outside the range an enumeration supports."""


def check_size(n: int, upper: int, what: str):
    if not MIN_PROBLEM_SIZE <= n <= upper:
        raise ProblemSizeError(f"{what} supports {MIN_PROBLEM_SIZE} <= n <= {upper}, got n={n}")


def all_preference_orders(n: int) -> List[PreferenceOrder]:
    """All n! strict orders, lexicographic by ranking."""
    check_size(n, MAX_ORDER_SIZE, "preference order enumeration")
    return [PreferenceOrder(p) for p in all_permutations(n)]


@dataclass(frozen=True)
class ContainmentPoset:
    """
    Pairs oriented by a preference order, ordered by interval containment.

    A pair sits above every pair whose interval of positions lies strictly
    inside its own; the chain condition makes exactly these comparisons forced.
    """
    order: PreferenceOrder
    elements: Tuple[OrderedPair, ...]
    contains: Dict[OrderedPair, FrozenSet[OrderedPair]]

    def is_above(self, upper: OrderedPair, lower: OrderedPair) -> bool:
        return lower in self.contains[upper]

    def comparable(self, p: OrderedPair, q: OrderedPair) -> bool:
        return self.is_above(p, q) or self.is_above(q, p)

    def maximal(self) -> List[OrderedPair]:
        return [e for e in self.elements if not any(self.is_above(u, e) for u in self.elements)]

    def minimal(self) -> List[OrderedPair]:
        return [e for e in self.elements if not self.contains[e]]

    def covers(self) -> List[Tuple[OrderedPair, OrderedPair]]:
        """Transitive reduction of the containment relation."""
        result = []
        for upper in self.elements:
            for lower in self.contains[upper]:
                between = any(lower in self.contains[mid] for mid in self.contains[upper])
                if not between:
                    result.append((upper, lower))
        return result


def _position_pairs(n: int) -> List[Tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def containment_poset(order: PreferenceOrder) -> ContainmentPoset:
    n = order.n
    ranking = order.ranking
    positions = _position_pairs(n)
    elements = tuple((ranking[i], ranking[j]) for i, j in positions)
    contains = {}
    for (i, j), element in zip(positions, elements):
        contains[element] = frozenset(
            (ranking[r], ranking[t]) for r, t in positions
            if i <= r and t <= j and (r, t) != (i, j)
        )
    return ContainmentPoset(order, elements, contains)


# =============================================================================
# LINEAR EXTENSIONS
# =============================================================================
# Every containment poset of size n is the identity-order poset with objects
# renamed, so extensions are computed once per n over position pairs.

@lru_cache(maxsize=None)
def _container_masks(n: int) -> Tuple[int, ...]:
    positions = _position_pairs(n)
    masks = []
    for r, t in positions:
        mask = 0
        for e, (i, j) in enumerate(positions):
            if i <= r and t <= j and (i, j) != (r, t):
                mask |= 1 << e
        masks.append(mask)
    return tuple(masks)


@lru_cache(maxsize=None)
def _extension_template(n: int) -> np.ndarray:
    """Rank of each position pair, one row per linear extension."""
    masks = _container_masks(n)
    k = len(masks)
    ranks = [0] * k
    rows: List[Tuple[int, ...]] = []

    def extend(placed: int, rank: int):
        if rank == 0:
            rows.append(tuple(ranks))
            return
        for e in range(k):
            if placed >> e & 1 or masks[e] & ~placed:
                continue
            ranks[e] = rank
            extend(placed | 1 << e, rank - 1)

    extend(0, k)
    get_logger().debug(f"Linear extension template for n={n}: {len(rows)} extensions")
    return np.array(rows, dtype=np.int16)


@lru_cache(maxsize=None)
def _extension_count(n: int, placed: int) -> int:
    masks = _container_masks(n)
    full = (1 << len(masks)) - 1
    if placed == full:
        return 1
    total = 0
    for e, mask in enumerate(masks):
        if not placed >> e & 1 and not mask & ~placed:
            total += _extension_count(n, placed | 1 << e)
    return total


def _order_indices(order: PreferenceOrder) -> Tuple[np.ndarray, np.ndarray]:
    n = order.n
    ranking = order.ranking
    forward = [pair_index(ranking[i], ranking[j], n) for i, j in _position_pairs(n)]
    backward = [pair_index(ranking[j], ranking[i], n) for i, j in _position_pairs(n)]
    return np.array(forward), np.array(backward)


def _relations_for_order(order: PreferenceOrder, ranks: np.ndarray,
                         validate: bool) -> List[CanonicalIntensity]:
    n = order.n
    forward, backward = _order_indices(order)
    values = np.zeros((len(ranks), n * (n - 1)), dtype=np.int16)
    values[:, forward] = ranks
    values[:, backward] = -ranks
    return [CanonicalIntensity(n, row, check=validate) for row in values]


def linear_extensions(poset: ContainmentPoset, validate: bool = True) -> List[CanonicalIntensity]:
    """
    Every rank assignment consistent with the poset, top rank k first placed.

    Extensions come from backtracking over ranks k down to 1, always choosing
    among the maximal remaining elements in element order.
    """
    n = poset.order.n
    check_size(n, MAX_RELATION_SIZE, "linear extension enumeration")
    return _relations_for_order(poset.order, _extension_template(n), validate)


def count_linear_extensions(poset: ContainmentPoset) -> int:
    """Number of linear extensions, by dynamic programming over placed up-sets."""
    return _extension_count(poset.order.n, 0)


def sample_intensity(order: PreferenceOrder, rng: np.random.Generator) -> CanonicalIntensity:
    """A uniformly random relation inducing `order`."""
    n = order.n
    masks = _container_masks(n)
    k = len(masks)
    ranks = [0] * k
    placed = 0
    for rank in range(k, 0, -1):
        choices = [e for e in range(k) if not placed >> e & 1 and not masks[e] & ~placed]
        weights = [_extension_count(n, placed | 1 << e) for e in choices]
        pick = int(rng.integers(sum(weights)))
        for e, weight in zip(choices, weights):
            if pick < weight:
                break
            pick -= weight
        ranks[e] = rank
        placed |= 1 << e
    return _relations_for_order(order, np.array([ranks], dtype=np.int16), validate=False)[0]


def sample_relation(n: int, rng: np.random.Generator) -> CanonicalIntensity:
    """A uniformly random relation for n: uniform order, then uniform extension."""
    check_size(n, MAX_ORDER_SIZE, "relation sampling")
    perms = all_permutations(n)
    order = PreferenceOrder(perms[int(rng.integers(len(perms)))])
    return sample_intensity(order, rng)


# Template rows materialized at a time when streaming
_STREAM_BLOCK = 4096


@lru_cache(maxsize=None)
def _all_relations(n: int) -> Tuple[CanonicalIntensity, ...]:
    relations: List[CanonicalIntensity] = []
    for order in all_preference_orders(n):
        relations.extend(_relations_for_order(order, _extension_template(n), validate=False))
    get_logger().info(f"Enumerated {len(relations)} strict intensity relations for n={n}")
    return tuple(relations)


class RelationSequence(Sequence):
    """
    All relations for n in enumeration order, built on access.

    Used above MAX_CACHED_RELATION_SIZE, where the full list does not fit in
    memory. Position i belongs to order i // per_order, extension i % per_order.
    """

    def __init__(self, n: int):
        self.n = n
        self.per_order = relations_per_order(n)
        self._count = factorial(n) * self.per_order

    def __len__(self) -> int:
        return self._count

    def __getitem__(self, position: int) -> CanonicalIntensity:
        if isinstance(position, slice):
            raise TypeError("RelationSequence does not support slicing")
        if position < 0:
            position += self._count
        if not 0 <= position < self._count:
            raise IndexError(f"relation {position} out of range for n={self.n}")
        order_number, row = divmod(position, self.per_order)
        order = PreferenceOrder(all_permutations(self.n)[order_number])
        ranks = _extension_template(self.n)[row:row + 1]
        return _relations_for_order(order, ranks, validate=False)[0]

    def __iter__(self) -> Iterator[CanonicalIntensity]:
        template = _extension_template(self.n)
        for order in all_preference_orders(self.n):
            for start in range(0, len(template), _STREAM_BLOCK):
                yield from _relations_for_order(
                    order, template[start:start + _STREAM_BLOCK], validate=False)


def all_intensity_relations(n: int) -> Sequence[CanonicalIntensity]:
    """
    All canonical strict relations, grouped by preference order (lexicographic).

    Up to MAX_CACHED_RELATION_SIZE this is a cached tuple; above it a lazy
    RelationSequence with the same order.
    """
    check_size(n, MAX_RELATION_SIZE, "relation enumeration")
    if n <= MAX_CACHED_RELATION_SIZE:
        return _all_relations(n)
    return RelationSequence(n)


@lru_cache(maxsize=None)
def relation_index(n: int) -> Dict[CanonicalIntensity, int]:
    """Stable position of every relation in all_intensity_relations(n)."""
    check_size(n, MAX_CACHED_RELATION_SIZE, "relation indexing")
    return {s: i for i, s in enumerate(all_intensity_relations(n))}


def relations_per_order(n: int) -> int:
    return _extension_count(n, 0)


@lru_cache(maxsize=None)
def _descending_positions(n: int) -> np.ndarray:
    """Per template row, position-pair indices from rank k down to rank 1."""
    return np.argsort(-_extension_template(n), axis=1)


def ranking_lines_for_order(order: PreferenceOrder) -> Iterator[str]:
    """Ranking lines of every relation inducing `order`, without building relations."""
    n = order.n
    ranking = order.ranking
    tokens = np.array([object_name(ranking[i], n) + object_name(ranking[j], n)
                       for i, j in _position_pairs(n)])
    descending = _descending_positions(n)
    for start in range(0, len(descending), _STREAM_BLOCK):
        for row in tokens[descending[start:start + _STREAM_BLOCK]].tolist():
            yield ">".join(row)


def iter_ranking_lines(n: int) -> Iterator[str]:
    """Every relation for n as a ranking line, streamed one preference order at a time."""
    check_size(n, MAX_RELATION_SIZE, "relation enumeration")
    for order in all_preference_orders(n):
        yield from ranking_lines_for_order(order)


def iter_relations_with_top(n: int, top: int,
                            orders: Optional[Sequence[PreferenceOrder]] = None
                            ) -> Iterator[CanonicalIntensity]:
    """Relations whose induced order starts with `top`, optionally restricted to given orders."""
    candidates = orders if orders is not None else all_preference_orders(n)
    for order in candidates:
        if order.top != top:
            continue
        yield from linear_extensions(containment_poset(order), validate=False)
