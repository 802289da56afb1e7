"""
Intensity Efficiency - Vectorized Efficiency Engine
Pareto masks and dominance adjacency from per-n flip tables
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Tuple

import numpy as np

from src.core.constants import MAX_RELATION_SIZE
from src.core.logger import get_logger
from src.efficiency.allocations import Allocation, all_allocations
from src.enumeration.relations import check_size
from src.model.profile import Profile


@dataclass(frozen=True)
class FlipTables:
    """
    Every flipped pair between every two allocations x < y, grouped by (x, y).

    Row r of the flat arrays says agents agent_i[r] < agent_j[r] hold
    (obj_a[r], obj_b[r]) under allocation pair_x and the reverse under pair_y.
    Segment s spans rows starts[s] up to starts[s + 1].
    """
    n: int
    allocations: np.ndarray
    pair_x: np.ndarray
    pair_y: np.ndarray
    starts: np.ndarray
    agent_i: np.ndarray
    agent_j: np.ndarray
    obj_a: np.ndarray
    obj_b: np.ndarray

    @property
    def size(self) -> int:
        return len(self.allocations)


@lru_cache(maxsize=None)
def flip_tables(n: int) -> FlipTables:
    check_size(n, MAX_RELATION_SIZE, "the efficiency engine")
    allocs = np.array(all_allocations(n), dtype=np.int8)
    m = len(allocs)
    first, second = np.triu_indices(n, k=1)
    held_i = allocs[:, first]
    held_j = allocs[:, second]

    flipped = (held_i[:, None, :] == held_j[None, :, :]) & (held_j[:, None, :] == held_i[None, :, :])
    flipped &= np.triu(np.ones((m, m), dtype=bool), k=1)[:, :, None]
    xs, ys, ps = np.nonzero(flipped)

    segment = xs.astype(np.int64) * m + ys
    _, starts = np.unique(segment, return_index=True)
    tables = FlipTables(
        n=n,
        allocations=allocs,
        pair_x=xs[starts],
        pair_y=ys[starts],
        starts=starts,
        agent_i=first[ps],
        agent_j=second[ps],
        obj_a=allocs[xs, first[ps]],
        obj_b=allocs[xs, second[ps]],
    )
    get_logger().debug(f"Flip tables for n={n}: {len(starts)} comparable pairs, {len(ps)} flips")
    return tables


def pareto_mask(profile: Profile) -> np.ndarray:
    """mask[x] is True iff allocation x (lexicographic index) is Pareto efficient."""
    tables = flip_tables(profile.n)
    utility = profile.utilities[np.arange(profile.n), tables.allocations]
    weakly_better = (utility[:, None, :] >= utility[None, :, :]).all(axis=2)
    strictly_better = (utility[:, None, :] > utility[None, :, :]).any(axis=2)
    return ~(weakly_better & strictly_better).any(axis=0)


def dominance_edges(profile: Profile, pareto: np.ndarray) -> np.ndarray:
    """(e, 2) array of (dominator, dominated) indices between Pareto-efficient allocations."""
    tables = flip_tables(profile.n)
    if len(tables.starts) == 0:
        return np.empty((0, 2), dtype=np.int64)
    tensor = profile.tensor.astype(np.int32)
    gap = (tensor[tables.agent_i, tables.obj_a, tables.obj_b]
           - tensor[tables.agent_j, tables.obj_a, tables.obj_b])
    low = np.minimum.reduceat(gap, tables.starts)
    high = np.maximum.reduceat(gap, tables.starts)

    both = pareto[tables.pair_x] & pareto[tables.pair_y]
    forward = both & (low >= 0) & (high > 0)
    backward = both & (high <= 0) & (low < 0)
    edges = np.concatenate([
        np.stack([tables.pair_x[forward], tables.pair_y[forward]], axis=1),
        np.stack([tables.pair_y[backward], tables.pair_x[backward]], axis=1),
    ])
    order = np.lexsort((edges[:, 1], edges[:, 0]))
    return edges[order].astype(np.int64)


def has_cycle(edges: np.ndarray) -> bool:
    """
    Peel edges leaving sources until none are left. A nonempty remainder in
    which every tail also has an incoming edge contains a directed cycle.
    """
    live = edges
    while len(live):
        sources = np.setdiff1d(live[:, 0], live[:, 1])
        if len(sources) == 0:
            return True
        live = live[~np.isin(live[:, 0], sources)]
    return False


@dataclass
class EfficiencyOutcome:
    """Indices refer to all_allocations(n)."""
    n: int
    pareto: np.ndarray
    edges: np.ndarray
    efficient: np.ndarray

    @property
    def pareto_count(self) -> int:
        return int(self.pareto.sum())

    @property
    def efficient_count(self) -> int:
        return int(self.efficient.sum())

    @property
    def cyclic(self) -> bool:
        return has_cycle(self.edges)

    def allocations(self, mask: np.ndarray) -> List[Allocation]:
        everything = all_allocations(self.n)
        return [everything[i] for i in np.flatnonzero(mask)]

    def edge_list(self) -> List[Tuple[Allocation, Allocation]]:
        everything = all_allocations(self.n)
        return [(everything[x], everything[y]) for x, y in self.edges.tolist()]


def efficiency_outcome(profile: Profile) -> EfficiencyOutcome:
    pareto = pareto_mask(profile)
    edges = dominance_edges(profile, pareto)
    dominated = np.zeros_like(pareto)
    dominated[edges[:, 1]] = True
    return EfficiencyOutcome(profile.n, pareto, edges, pareto & ~dominated)
