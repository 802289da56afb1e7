"""
Intensity Efficiency - Five-Agent Counterexample
Builds the n = 5 profile, checks its dominance cycle and searches completions
"""

from dataclasses import dataclass, field
from itertools import product
from math import factorial
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from src.core.constants import (
    COUNTEREXAMPLE_AGENT4_TOP, COUNTEREXAMPLE_AGENT5_TOP, COUNTEREXAMPLE_ALLOCATIONS,
    COUNTEREXAMPLE_CITED_EDGES, COUNTEREXAMPLE_CYCLE, COUNTEREXAMPLE_RANKINGS,
    DEFAULT_AGENT4_RANKING, DEFAULT_AGENT5_RANKING
)
from src.core.logger import get_logger
from src.efficiency.allocations import Allocation
from src.efficiency.dominance import (
    DominanceDigraph, dominance_digraph, flipped_pairs, simple_cycles
)
from src.enumeration.relations import iter_relations_with_top, relations_per_order
from src.model.intensity import (
    CanonicalIntensity, PreferenceOrder, format_ranking_line, intensity_from_names, object_index
)
from src.model.profile import Profile

COUNTEREXAMPLE_SIZE = 5


class CompletionError(ValueError):
    """A completion for agent 4 or 5 that breaks its fixed top choice."""


def default_completions() -> Tuple[CanonicalIntensity, CanonicalIntensity]:
    return (intensity_from_names(DEFAULT_AGENT4_RANKING, COUNTEREXAMPLE_SIZE),
            intensity_from_names(DEFAULT_AGENT5_RANKING, COUNTEREXAMPLE_SIZE))


def _check_completion(completion: CanonicalIntensity, agent: int, top: str):
    if completion.n != COUNTEREXAMPLE_SIZE:
        raise CompletionError(f"agent {agent} completion has n={completion.n}, expected 5")
    actual = completion.preference()
    if actual.top != object_index(top, COUNTEREXAMPLE_SIZE):
        raise CompletionError(
            f"agent {agent} must rank {top} first, completion orders {actual}")


def build_counterexample_profile(completion4: Optional[CanonicalIntensity] = None,
                                 completion5: Optional[CanonicalIntensity] = None) -> Profile:
    """
    Agents 1-3 take the fixed columns; agents 4 and 5 take the completions,
    which only have to keep d and c respectively on top.

    Raises:
        CompletionError: if a completion has another top choice
    """
    defaults = default_completions()
    completion4 = completion4 if completion4 is not None else defaults[0]
    completion5 = completion5 if completion5 is not None else defaults[1]
    _check_completion(completion4, 4, COUNTEREXAMPLE_AGENT4_TOP)
    _check_completion(completion5, 5, COUNTEREXAMPLE_AGENT5_TOP)
    fixed = [intensity_from_names(r, COUNTEREXAMPLE_SIZE) for r in COUNTEREXAMPLE_RANKINGS]
    return Profile(COUNTEREXAMPLE_SIZE, tuple(fixed) + (completion4, completion5))


# =============================================================================
# VERIFICATION
# =============================================================================
@dataclass
class CitedInequality:
    """One cycle edge and the interpersonal comparison it rests on (agents 1-based)."""
    dominator: str
    dominated: str
    stronger: int
    weaker: int
    pair: Tuple[str, str]
    stronger_value: int
    weaker_value: int
    sole_flip: bool
    edge_present: bool

    @property
    def holds(self) -> bool:
        return self.stronger_value > self.weaker_value and self.sole_flip and self.edge_present

    def describe(self) -> str:
        a, b = self.pair
        mark = "ok" if self.holds else "FAILED"
        return (f"{self.dominator} D {self.dominated}: s_{self.stronger}({a},{b})={self.stronger_value}"
                f" > s_{self.weaker}({a},{b})={self.weaker_value} [{mark}]")


@dataclass
class CounterexampleReport:
    completion4: CanonicalIntensity
    completion5: CanonicalIntensity
    pareto_count: int
    six_listed_present: bool
    cycle_verified: bool
    cycle_detected: bool
    ie_set: List[Allocation]
    cited_inequalities: List[CitedInequality] = field(default_factory=list)
    pareto_set: List[Allocation] = field(default_factory=list)
    digraph: Optional[DominanceDigraph] = None

    @property
    def confirmed(self) -> bool:
        """The cycle checks out and no allocation is intensity-efficient."""
        return self.six_listed_present and self.cycle_verified and not self.ie_set

    def describe(self) -> List[str]:
        lines = [
            f"agent 4 completion: {format_ranking_line(self.completion4)}",
            f"agent 5 completion: {format_ranking_line(self.completion5)}",
            f"Pareto-efficient allocations: {self.pareto_count}",
            f"listed allocations Pareto efficient: {'yes' if self.six_listed_present else 'no'}",
        ]
        lines += [f"  {c.describe()}" for c in self.cited_inequalities]
        lines.append(f"cycle verified: {'yes' if self.cycle_verified else 'no'}")
        ie = ", ".join(x.label() for x in self.ie_set) or "(none)"
        lines.append(f"intensity-efficient allocations: {ie}")
        return lines

    def to_dict(self) -> Dict:
        return {
            "completion4": format_ranking_line(self.completion4),
            "completion5": format_ranking_line(self.completion5),
            "pareto_count": self.pareto_count,
            "six_listed_present": self.six_listed_present,
            "cycle_verified": self.cycle_verified,
            "cycle_detected": self.cycle_detected,
            "ie_set": [x.label() for x in self.ie_set],
            "confirmed": self.confirmed,
        }


def listed_allocations() -> Dict[str, Allocation]:
    return {name: Allocation.from_label(label) for name, label in COUNTEREXAMPLE_ALLOCATIONS.items()}


def _rotations_match(cycle: Sequence, target: Sequence) -> bool:
    if len(cycle) != len(target) or target[0] not in cycle:
        return False
    start = list(cycle).index(target[0])
    return list(cycle[start:]) + list(cycle[:start]) == list(target)


def verify_counterexample(profile: Profile) -> CounterexampleReport:
    """
    Check the listed allocations, each cycle edge against its cited comparison,
    and the full intensity-efficient set. Discrepancies are reported, not raised.
    """
    g = dominance_digraph(profile)
    listed = listed_allocations()
    nodes = set(g.nodes)
    present = all(x in nodes for x in listed.values())

    cited = []
    for dominator, dominated, (stronger, weaker, a, b) in COUNTEREXAMPLE_CITED_EDGES:
        x, y = listed[dominator], listed[dominated]
        ia, ib = object_index(a, profile.n), object_index(b, profile.n)
        flips = flipped_pairs(x, y)
        sole = (len(flips) == 1
                and {flips[0].i, flips[0].j} == {stronger - 1, weaker - 1}
                and {flips[0].a, flips[0].b} == {ia, ib})
        cited.append(CitedInequality(
            dominator, dominated, stronger, weaker, (a, b),
            profile.intensity(stronger - 1, ia, ib), profile.intensity(weaker - 1, ia, ib),
            sole, present and g.has_edge(x, y)))

    target = [listed[name] for name in COUNTEREXAMPLE_CYCLE]
    detected = present and any(
        _rotations_match(c, target) for c in simple_cycles(g.subgraph(target)))

    efficient = g.efficient()
    report = CounterexampleReport(
        completion4=profile.agents[3],
        completion5=profile.agents[4],
        pareto_count=len(g.nodes),
        six_listed_present=present,
        cycle_verified=present and all(c.holds for c in cited),
        cycle_detected=detected,
        ie_set=efficient,
        cited_inequalities=cited,
        pareto_set=list(g.nodes),
        digraph=g,
    )
    get_logger().info(
        f"Counterexample check: {report.pareto_count} Pareto, cycle "
        f"{'verified' if report.cycle_verified else 'NOT verified'}, {len(efficient)} intensity-efficient")
    return report


# =============================================================================
# COMPLETION SEARCH
# =============================================================================
def completion_candidates(top: str,
                          orders: Optional[Sequence[PreferenceOrder]] = None
                          ) -> Iterator[CanonicalIntensity]:
    """Every n = 5 relation with `top` first, optionally restricted to given orders."""
    return iter_relations_with_top(COUNTEREXAMPLE_SIZE, object_index(top, COUNTEREXAMPLE_SIZE), orders)


def completion_space_size() -> Tuple[int, int, int]:
    """(agent 4 candidates, agent 5 candidates, pairs)."""
    per_top = factorial(COUNTEREXAMPLE_SIZE - 1) * relations_per_order(COUNTEREXAMPLE_SIZE)
    return per_top, per_top, per_top * per_top


@dataclass
class CompletionSearch:
    completions: Optional[Tuple[CanonicalIntensity, CanonicalIntensity]]
    pairs_tried: int
    exhausted: bool
    report: Optional[CounterexampleReport] = None

    @property
    def found(self) -> bool:
        return self.completions is not None


def search_completions(agent4_candidates: Optional[Iterable[CanonicalIntensity]] = None,
                       agent5_candidates: Optional[Iterable[CanonicalIntensity]] = None,
                       max_pairs: Optional[int] = None) -> CompletionSearch:
    """
    Try completion pairs until one yields an empty intensity-efficient set.

    The default completions go first when both candidate sets are left open;
    `max_pairs` caps the number of pairs tried.
    """
    logger = get_logger()
    open_search = agent4_candidates is None and agent5_candidates is None
    fours = list(agent4_candidates if agent4_candidates is not None
                 else completion_candidates(COUNTEREXAMPLE_AGENT4_TOP))
    fives = list(agent5_candidates if agent5_candidates is not None
                 else completion_candidates(COUNTEREXAMPLE_AGENT5_TOP))

    pairs: Iterable[Tuple[CanonicalIntensity, CanonicalIntensity]] = product(fours, fives)
    if open_search:
        first = default_completions()
        pairs = _default_first(first, pairs)

    tried = 0
    for completion4, completion5 in pairs:
        if max_pairs is not None and tried >= max_pairs:
            logger.info(f"Completion search stopped after {tried} pairs")
            return CompletionSearch(None, tried, exhausted=False)
        tried += 1
        report = verify_counterexample(build_counterexample_profile(completion4, completion5))
        if report.confirmed:
            logger.info(f"Completion search succeeded after {tried} pairs")
            return CompletionSearch((completion4, completion5), tried, exhausted=False, report=report)

    logger.error(f"Completion search exhausted {tried} pairs without an empty intensity-efficient set")
    return CompletionSearch(None, tried, exhausted=True)


CompletionPair = Tuple[CanonicalIntensity, CanonicalIntensity]


def _default_first(first: CompletionPair,
                   pairs: Iterable[CompletionPair]) -> Iterator[CompletionPair]:
    yield first
    for pair in pairs:
        if pair != first:
            yield pair
