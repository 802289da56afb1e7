"""
Permutation utilities for relabeling objects and agents
"""

from itertools import permutations
from typing import List, Sequence, Tuple

Permutation = Tuple[int, ...]


def all_permutations(n: int) -> List[Permutation]:
    """All permutations of range(n) in lexicographic order."""
    return list(permutations(range(n)))


def is_permutation(p: Sequence[int]) -> bool:
    return sorted(p) == list(range(len(p)))


def inverse(p: Sequence[int]) -> Permutation:
    """Inverse permutation: inverse(p)[p[i]] == i."""
    inv = [0] * len(p)
    for i, image in enumerate(p):
        inv[image] = i
    return tuple(inv)


def compose(p: Sequence[int], q: Sequence[int]) -> Permutation:
    """Composition p after q: (p o q)[i] == p[q[i]]."""
    return tuple(p[q[i]] for i in range(len(q)))


def cycles(p: Sequence[int]) -> List[Tuple[int, ...]]:
    """Cycle decomposition, each cycle starting at its smallest element."""
    seen = [False] * len(p)
    result = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cycle = []
        i = start
        while not seen[i]:
            seen[i] = True
            cycle.append(i)
            i = p[i]
        result.append(tuple(cycle))
    return result


def transpositions(p: Sequence[int]) -> List[Tuple[int, int]]:
    """The 2-cycles of p as (i, j) with i < j."""
    return [c for c in cycles(p) if len(c) == 2]
