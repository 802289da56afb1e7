"""
Intensity Efficiency - Existence Checks
Sweeps that look for profiles without intensity-efficient allocations
"""

import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Union

from src.core.logger import get_logger
from src.efficiency.dominance import AnalysisSummary, analyze_profile
from src.efficiency.engine import efficiency_outcome
from src.enumeration.profiles import ProfileItem
from src.formats.documents import parse_profile_dict, profile_to_dict
from src.model.profile import Profile


@dataclass
class Finding:
    """A profile worth replaying: empty intensity-efficient set or a dominance cycle."""
    sample: int
    key: Optional[List[int]]
    document: Dict
    pareto_count: int
    efficient_count: int
    cycle: Optional[List[str]] = None

    def to_dict(self) -> Dict:
        return {
            "sample": self.sample,
            "key": self.key,
            "pareto_count": self.pareto_count,
            "efficient_count": self.efficient_count,
            "cycle": self.cycle,
            "profile": self.document,
        }

    @classmethod
    def from_dict(cls, data: Dict) -> 'Finding':
        return cls(
            sample=data["sample"],
            key=data.get("key"),
            document=data["profile"],
            pareto_count=data["pareto_count"],
            efficient_count=data["efficient_count"],
            cycle=data.get("cycle"),
        )


@dataclass
class ExistenceReport:
    """
    Outcome of checking a set of profiles. In symmetry mode every checked
    representative stands for its whole orbit: profiles_covered and the
    histogram count orbit members, profiles_checked counts representatives.
    """
    n: int
    mode: str
    profiles_checked: int = 0
    profiles_covered: int = 0
    failures: List[Finding] = field(default_factory=list)
    cycles_found: List[Finding] = field(default_factory=list)
    ie_histogram: Dict[int, int] = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def holds(self) -> bool:
        return not self.failures and not self.cycles_found

    def merge(self, other: 'ExistenceReport') -> 'ExistenceReport':
        """Counts add, findings concatenate in sample order, elapsed times add."""
        if (self.n, self.mode) != (other.n, other.mode):
            raise ValueError(f"cannot merge {self.mode} n={self.n} with {other.mode} n={other.n}")
        histogram = Counter(self.ie_histogram)
        histogram.update(other.ie_histogram)
        return ExistenceReport(
            n=self.n,
            mode=self.mode,
            profiles_checked=self.profiles_checked + other.profiles_checked,
            profiles_covered=self.profiles_covered + other.profiles_covered,
            failures=_ordered(self.failures + other.failures),
            cycles_found=_ordered(self.cycles_found + other.cycles_found),
            ie_histogram=dict(sorted(histogram.items())),
            elapsed=self.elapsed + other.elapsed,
        )

    def summary_line(self) -> str:
        return (f"{self.profiles_checked} profiles checked, {len(self.failures)} failures, "
                f"{len(self.cycles_found)} cycles")

    def to_dict(self) -> Dict:
        return {
            "n": self.n,
            "mode": self.mode,
            "profiles_checked": self.profiles_checked,
            "profiles_covered": self.profiles_covered,
            "failures": [f.to_dict() for f in self.failures],
            "cycles": [f.to_dict() for f in self.cycles_found],
            "ie_histogram": {str(k): v for k, v in self.ie_histogram.items()},
            "elapsed_ms": round(self.elapsed * 1000),
        }

    @classmethod
    def from_dict(cls, data: Dict) -> 'ExistenceReport':
        return cls(
            n=data["n"],
            mode=data["mode"],
            profiles_checked=data["profiles_checked"],
            profiles_covered=data["profiles_covered"],
            failures=[Finding.from_dict(f) for f in data["failures"]],
            cycles_found=[Finding.from_dict(f) for f in data["cycles"]],
            ie_histogram={int(k): v for k, v in data["ie_histogram"].items()},
            elapsed=data["elapsed_ms"] / 1000,
        )


def _ordered(findings: List[Finding]) -> List[Finding]:
    return sorted(findings, key=lambda f: (f.sample, f.key or []))


def _finding(item: ProfileItem, pareto_count: int, efficient_count: int,
             cycle: Optional[List[str]] = None) -> Finding:
    return Finding(
        sample=item.index,
        key=list(item.key) if item.key is not None else None,
        document=profile_to_dict(item.profile),
        pareto_count=pareto_count,
        efficient_count=efficient_count,
        cycle=cycle,
    )


def check_profiles(profiles: Iterable[Union[Profile, ProfileItem]], n: int,
                   mode: str = "explicit") -> ExistenceReport:
    """Compute the intensity-efficient set and cycle status of each profile."""
    started = time.perf_counter()
    report = ExistenceReport(n, mode)
    histogram: Counter = Counter()

    for position, entry in enumerate(profiles):
        item = entry if isinstance(entry, ProfileItem) else ProfileItem(position, None, entry)
        outcome = efficiency_outcome(item.profile)
        report.profiles_checked += 1
        report.profiles_covered += item.weight
        histogram[outcome.efficient_count] += item.weight

        if outcome.efficient_count == 0:
            get_logger().warning(f"n={n} sample {item.index}: no intensity-efficient allocation")
            report.failures.append(_finding(item, outcome.pareto_count, 0))
        if outcome.cyclic:
            summary = analyze_profile(item.profile)
            labels = [x.label() for x in summary.cycle]
            get_logger().warning(f"n={n} sample {item.index}: dominance cycle {' > '.join(labels)}")
            report.cycles_found.append(
                _finding(item, outcome.pareto_count, outcome.efficient_count, labels))

    report.ie_histogram = dict(sorted(histogram.items()))
    report.elapsed = time.perf_counter() - started
    return report


def replay_finding(finding: Finding) -> AnalysisSummary:
    """Rebuild a recorded profile from its document and analyze it again."""
    return analyze_profile(parse_profile_dict(finding.document))
