"""
Intensity Efficiency - Intensity Dominance
Flipped pairs, the dominance digraph, intensity-efficient sets and cycles
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

import networkx as nx

from src.core.logger import get_logger
from src.efficiency.allocations import Allocation, is_pareto_efficient, pareto_set
from src.efficiency.engine import efficiency_outcome
from src.model.intensity import ObjectId, object_name
from src.model.profile import Profile
from src.utils.permutations import compose, inverse, transpositions

Edge = Tuple[Allocation, Allocation]


class NotParetoEfficientError(ValueError):
    """Intensity dominance was asked about an allocation outside the Pareto set."""

    def __init__(self, allocation: Sequence[ObjectId]):
        self.allocation = Allocation(allocation)
        super().__init__(
            f"intensity dominance compares Pareto-efficient allocations only; "
            f"{self.allocation.label()} is Pareto dominated")


@dataclass(frozen=True)
class FlippedPair:
    """Agent i holds a and agent j holds b under x; y swaps them. Agents are 0-based."""
    i: int
    j: int
    a: ObjectId
    b: ObjectId

    def describe(self, n: int) -> str:
        return (f"agents {self.i + 1},{self.j + 1} swap "
                f"{object_name(self.a, n)},{object_name(self.b, n)}")


def flipped_pairs(x: Sequence[ObjectId], y: Sequence[ObjectId]) -> List[FlippedPair]:
    """
    Agent pairs whose objects are exchanged between x and y, each reported once (i < j).

    These are the 2-cycles of the agent permutation taking x to y.
    """
    moved = compose(inverse(x), y)
    return [FlippedPair(i, j, x[i], x[j]) for i, j in transpositions(moved)]


def more_intense(profile: Profile, i: int, j: int, a: ObjectId, b: ObjectId) -> bool:
    """Ordinal comparison across agents: s_i(a, b) > s_j(a, b)."""
    return profile.intensity(i, a, b) > profile.intensity(j, a, b)


def intensity_dominates(x: Sequence[ObjectId], y: Sequence[ObjectId], profile: Profile) -> bool:
    """
    True iff x intensity-dominates y: they share at least one flipped pair,
    the agent holding a under x never has the weaker intensity for (a, b),
    and is strictly stronger at least once.

    Raises:
        NotParetoEfficientError: if x or y is Pareto dominated
    """
    for allocation in (x, y):
        if not is_pareto_efficient(allocation, profile):
            raise NotParetoEfficientError(allocation)
    return _flips_favor(x, y, profile)


def _flips_favor(x: Sequence[ObjectId], y: Sequence[ObjectId], profile: Profile) -> bool:
    flips = flipped_pairs(x, y)
    if not flips:
        return False
    strict = False
    for flip in flips:
        mine = profile.intensity(flip.i, flip.a, flip.b)
        theirs = profile.intensity(flip.j, flip.a, flip.b)
        if mine < theirs:
            return False
        strict = strict or mine > theirs
    return strict


# =============================================================================
# DIGRAPH
# =============================================================================
@dataclass(frozen=True)
class DominanceDigraph:
    """Pareto-efficient allocations with an edge x -> y whenever x dominates y."""
    n: int
    nodes: Tuple[Allocation, ...]
    edges: Tuple[Edge, ...]

    def to_networkx(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(self.nodes)
        graph.add_edges_from(self.edges)
        return graph

    def subgraph(self, nodes: Iterable[Allocation]) -> 'DominanceDigraph':
        keep = set(nodes)
        return DominanceDigraph(
            self.n,
            tuple(v for v in self.nodes if v in keep),
            tuple((u, v) for u, v in self.edges if u in keep and v in keep),
        )

    def in_degree(self) -> Dict[Allocation, int]:
        degree = {v: 0 for v in self.nodes}
        for _, v in self.edges:
            degree[v] += 1
        return degree

    def dominators(self, y: Allocation) -> List[Allocation]:
        return [u for u, v in self.edges if v == y]

    def has_edge(self, x: Allocation, y: Allocation) -> bool:
        return (x, y) in set(self.edges)

    def efficient(self) -> List[Allocation]:
        return [v for v, d in self.in_degree().items() if d == 0]


def dominance_digraph(profile: Profile) -> DominanceDigraph:
    outcome = efficiency_outcome(profile)
    return DominanceDigraph(
        profile.n,
        tuple(outcome.allocations(outcome.pareto)),
        tuple(outcome.edge_list()),
    )


def intensity_efficient_set(profile: Profile) -> Set[Allocation]:
    """Pareto-efficient allocations that no Pareto-efficient allocation dominates."""
    return set(dominance_digraph(profile).efficient())


def intensity_efficient_by_definition(profile: Profile) -> Set[Allocation]:
    """The same set computed pairwise from flipped pairs, without the engine."""
    efficient = pareto_set(profile)
    return {y for y in efficient
            if not any(_flips_favor(x, y, profile) for x in efficient if x != y)}


def find_cycle(g: DominanceDigraph) -> Optional[List[Allocation]]:
    """A directed cycle taken from the first non-trivial strongly connected component."""
    graph = g.to_networkx()
    components = [c for c in nx.strongly_connected_components(graph) if len(c) > 1]
    if not components:
        return None
    component = min(components, key=min)
    cycle = nx.find_cycle(graph.subgraph(component), source=min(component))
    return [u for u, _ in cycle]


def simple_cycles(g: DominanceDigraph) -> List[List[Allocation]]:
    return [list(c) for c in nx.simple_cycles(g.to_networkx())]


# =============================================================================
# ANALYSIS
# =============================================================================
@dataclass
class AnalysisSummary:
    profile: Profile
    digraph: DominanceDigraph
    efficient: List[Allocation]
    dominated: Dict[Allocation, List[Allocation]] = field(default_factory=dict)
    cycle: Optional[List[Allocation]] = None

    @property
    def pareto(self) -> List[Allocation]:
        return list(self.digraph.nodes)

    @property
    def discarded_fraction(self) -> Fraction:
        """Share of the Pareto set the refinement removes."""
        if not self.digraph.nodes:
            return Fraction(0)
        return Fraction(len(self.digraph.nodes) - len(self.efficient), len(self.digraph.nodes))


def analyze_profile(profile: Profile) -> AnalysisSummary:
    g = dominance_digraph(profile)
    efficient = g.efficient()
    dominated = {v: g.dominators(v) for v in g.nodes if v not in set(efficient)}
    summary = AnalysisSummary(profile, g, efficient, dominated, find_cycle(g))
    get_logger().debug(
        f"Analyzed n={profile.n}: {len(g.nodes)} Pareto, {len(g.edges)} edges, "
        f"{len(efficient)} intensity-efficient")
    return summary
