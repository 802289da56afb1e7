"""
Intensity Efficiency - Profile Spaces
Full, symmetry-reduced and random iteration over intensity profiles
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement, permutations
from math import factorial
from typing import Iterator, List, Optional, Set, Tuple

import numpy as np

from src.core.constants import (
    DEFAULT_FULL_BUDGET, MAX_CACHED_RELATION_SIZE, MAX_ORDER_SIZE, MAX_RELATION_SIZE,
    MAX_SYMMETRY_SIZE, IterationMode
)
from src.core.logger import get_logger
from src.enumeration.relations import (
    all_intensity_relations, check_size, relation_index, relations_per_order, sample_relation
)
from src.model.profile import Profile
from src.utils.permutations import all_permutations

ProfileKey = Tuple[int, ...]

# Random sweeps draw relation indices from the enumerated list up to this n
_MAX_INDEXED_RANDOM_SIZE = MAX_CACHED_RELATION_SIZE

# Samples drawn per generator; block b uses the stream (seed, b)
RANDOM_BLOCK_SIZE = 4096


class ProfileBudgetError(ValueError):
    """A full sweep would visit more profiles than the configured budget."""

    def __init__(self, n: int, total: int, budget: int):
        self.total = total
        self.budget = budget
        super().__init__(
            f"full sweep for n={n} would visit {total:,} profiles, over the budget of {budget:,}; "
            f"use symmetry reduction or random sampling")


def relation_count(n: int) -> int:
    """R, the number of strict intensity relations for n."""
    return factorial(n) * relations_per_order(n)


def profile_from_key(n: int, key: ProfileKey) -> Profile:
    relations = all_intensity_relations(n)
    return Profile(n, tuple(relations[r] for r in key))


def key_of_profile(profile: Profile) -> ProfileKey:
    index = relation_index(profile.n)
    return tuple(index[agent] for agent in profile.agents)


# =============================================================================
# SYMMETRY REDUCTION
# =============================================================================
@lru_cache(maxsize=None)
def relabel_table(n: int) -> np.ndarray:
    """table[p, r]: index of relation r after renaming objects by the p-th permutation."""
    check_size(n, MAX_SYMMETRY_SIZE, "symmetry reduction")
    relations = all_intensity_relations(n)
    index = relation_index(n)
    perms = all_permutations(n)
    table = np.empty((len(perms), len(relations)), dtype=np.int32)
    for p, perm in enumerate(perms):
        for r, relation in enumerate(relations):
            table[p, r] = index[relation.relabel(perm)]
    return table


def _sorted_images(key: ProfileKey, n: int) -> np.ndarray:
    return np.sort(relabel_table(n)[:, list(key)], axis=1)


def canonical_form(key: ProfileKey, n: int) -> ProfileKey:
    """Lexicographically smallest key over object renamings and agent reorderings."""
    images = _sorted_images(key, n)
    return min(tuple(int(v) for v in row) for row in images)


def is_canonical(key: ProfileKey, n: int) -> bool:
    if list(key) != sorted(key):
        return False
    diff = _sorted_images(key, n) - np.asarray(key)
    nonzero = diff != 0
    first = nonzero.argmax(axis=1)
    leading = diff[np.arange(len(diff)), first]
    return not np.any(nonzero.any(axis=1) & (leading < 0))


def _arrangements(multiset: ProfileKey) -> int:
    """Number of distinct orderings of a sorted tuple."""
    count = factorial(len(multiset))
    for value in set(multiset):
        count //= factorial(multiset.count(value))
    return count


def orbit_size(key: ProfileKey, n: int) -> int:
    """Number of ordered profiles in the orbit of `key`."""
    multisets = {tuple(int(v) for v in row) for row in _sorted_images(key, n)}
    return sum(_arrangements(m) for m in multisets)


def orbit(key: ProfileKey, n: int) -> Set[ProfileKey]:
    """Every ordered profile reachable by renaming objects and reordering agents."""
    table = relabel_table(n)
    result: Set[ProfileKey] = set()
    for row in table[:, list(key)]:
        image = tuple(int(v) for v in row)
        result.update(permutations(image))
    return result


# =============================================================================
# ITERATION
# =============================================================================
@dataclass
class ProfileItem:
    """One visited profile; `index` is its position in the iterator's index space."""
    index: int
    key: Optional[ProfileKey]
    profile: Profile
    weight: int = 1


class ProfileIterator:
    """
    Walks a profile space in one of three modes.

    full:      every one of the R^n profiles, index = mixed-radix profile number
    symmetry:  one canonical representative per orbit, index = (r1, r2) prefix number
    random:    `count` independent uniform draws, index = sample number
    """

    def __init__(self, n: int, mode: IterationMode = IterationMode.FULL,
                 seed: Optional[int] = None, count: int = 0,
                 budget: int = DEFAULT_FULL_BUDGET):
        check_size(n, MAX_ORDER_SIZE, "profile iteration")
        self.n = n
        self.mode = mode
        self.seed = seed
        self.count = count
        self.budget = budget

        if mode == IterationMode.FULL:
            check_size(n, MAX_RELATION_SIZE, "full profile iteration")
            total = relation_count(n) ** n
            if total > budget:
                raise ProfileBudgetError(n, total, budget)
        elif mode == IterationMode.SYMMETRY:
            check_size(n, MAX_SYMMETRY_SIZE, "symmetry-reduced iteration")
        elif mode == IterationMode.RANDOM:
            if seed is None:
                raise ValueError("random profile iteration requires a seed")
            if count < 0:
                raise ValueError(f"sample count must be non-negative, got {count}")

    @property
    def relation_count(self) -> int:
        return relation_count(self.n)

    def space_size(self) -> int:
        r = self.relation_count
        if self.mode == IterationMode.FULL:
            return r ** self.n
        if self.mode == IterationMode.SYMMETRY:
            return relations_per_order(self.n) * r
        return self.count

    def __iter__(self) -> Iterator[Profile]:
        for item in self.iterate():
            yield item.profile

    def iterate(self, start: int = 0, stop: Optional[int] = None) -> Iterator[ProfileItem]:
        stop = self.space_size() if stop is None else min(stop, self.space_size())
        if self.mode == IterationMode.FULL:
            yield from self._iterate_full(start, stop)
        elif self.mode == IterationMode.SYMMETRY:
            yield from self._iterate_symmetry(start, stop)
        else:
            yield from self._iterate_random(start, stop)

    def _iterate_full(self, start: int, stop: int) -> Iterator[ProfileItem]:
        r = self.relation_count
        for index in range(start, stop):
            digits: List[int] = []
            rest = index
            for _ in range(self.n):
                rest, digit = divmod(rest, r)
                digits.append(digit)
            key = tuple(reversed(digits))
            yield ProfileItem(index, key, profile_from_key(self.n, key))

    def _iterate_symmetry(self, start: int, stop: int) -> Iterator[ProfileItem]:
        r = self.relation_count
        for prefix in range(start, stop):
            first, second = divmod(prefix, r)
            if second < first:
                continue
            for tail in combinations_with_replacement(range(second, r), self.n - 2):
                key = (first, second) + tail
                if is_canonical(key, self.n):
                    yield ProfileItem(prefix, key, profile_from_key(self.n, key),
                                      orbit_size(key, self.n))

    def _iterate_random(self, start: int, stop: int) -> Iterator[ProfileItem]:
        if self.n > _MAX_INDEXED_RANDOM_SIZE:
            yield from self._iterate_random_unindexed(start, stop)
            return
        # Draws depend on the block, never on the requested range
        for block in range(start // RANDOM_BLOCK_SIZE, -(-stop // RANDOM_BLOCK_SIZE)):
            base = block * RANDOM_BLOCK_SIZE
            rng = np.random.default_rng([self.seed, block])
            keys = rng.integers(self.relation_count, size=(RANDOM_BLOCK_SIZE, self.n)).tolist()
            for index in range(max(start, base), min(stop, base + RANDOM_BLOCK_SIZE)):
                key = tuple(keys[index - base])
                yield ProfileItem(index, key, profile_from_key(self.n, key))

    def _iterate_random_unindexed(self, start: int, stop: int) -> Iterator[ProfileItem]:
        # One generator per sample; relation sampling dominates the cost here
        for index in range(start, stop):
            rng = np.random.default_rng([self.seed, index])
            agents = tuple(sample_relation(self.n, rng) for _ in range(self.n))
            yield ProfileItem(index, None, Profile(self.n, agents))


def profile_iterator(n: int, mode: IterationMode = IterationMode.FULL,
                     seed: Optional[int] = None, count: int = 0,
                     budget: int = DEFAULT_FULL_BUDGET) -> ProfileIterator:
    iterator = ProfileIterator(n, mode, seed=seed, count=count, budget=budget)
    get_logger().debug(f"Profile iterator n={n} mode={mode.value} space={iterator.space_size():,}")
    return iterator
