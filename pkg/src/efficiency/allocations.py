"""
Intensity Efficiency - Allocations
Deterministic assignments of objects to agents and Pareto efficiency
"""

from functools import lru_cache
from typing import List, Sequence, Set, Tuple

from src.core.constants import MAX_ORDER_SIZE
from src.enumeration.relations import check_size
from src.model.intensity import ObjectId, object_index, object_name
from src.model.profile import Profile
from src.utils.permutations import all_permutations, is_permutation


class AllocationError(ValueError):
    """An assignment that does not give every object to exactly one agent."""


class Allocation(tuple):
    """x[i] is the object agent i receives."""

    def __new__(cls, assignment: Sequence[ObjectId]):
        values = tuple(int(o) for o in assignment)
        if not is_permutation(values):
            raise AllocationError(f"not a bijection between agents and objects: {values}")
        return super().__new__(cls, values)

    @property
    def n(self) -> int:
        return len(self)

    def label(self) -> str:
        """Object names in agent order, e.g. 'cba'."""
        return "".join(object_name(o, self.n) for o in self)

    @classmethod
    def from_label(cls, label: str) -> 'Allocation':
        n = len(label)
        return cls(object_index(ch, n) for ch in label)

    def relabel(self, perm: Sequence[ObjectId]) -> 'Allocation':
        """Rename every object o to perm[o]."""
        return Allocation(perm[o] for o in self)

    def permute_agents(self, order: Sequence[int]) -> 'Allocation':
        """New agent i holds what old agent order[i] held."""
        return Allocation(self[i] for i in order)

    def __repr__(self) -> str:
        return f"Allocation({self.label()})"


@lru_cache(maxsize=None)
def _allocations(n: int) -> Tuple[Allocation, ...]:
    return tuple(Allocation(p) for p in all_permutations(n))


def all_allocations(n: int) -> List[Allocation]:
    """All n! allocations in lexicographic order."""
    check_size(n, MAX_ORDER_SIZE, "allocation enumeration")
    return list(_allocations(n))


def pareto_dominates(y: Sequence[ObjectId], x: Sequence[ObjectId], profile: Profile) -> bool:
    """True iff every agent weakly prefers y to x and at least one strictly."""
    strict = False
    for agent, (gets_y, gets_x) in enumerate(zip(y, x)):
        if gets_y == gets_x:
            continue
        if not profile.prefers(agent, gets_y, gets_x):
            return False
        strict = True
    return strict


def is_pareto_efficient(x: Sequence[ObjectId], profile: Profile) -> bool:
    return not any(pareto_dominates(y, x, profile) for y in _allocations(profile.n))


def pareto_set(profile: Profile) -> Set[Allocation]:
    """Allocations no other allocation Pareto-dominates, by brute force over n!."""
    return {x for x in all_allocations(profile.n) if is_pareto_efficient(x, profile)}
