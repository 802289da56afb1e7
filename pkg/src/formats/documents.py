"""
Intensity Efficiency - Profile Documents
JSON profile files, their schema checks and normalized serialization
"""

import json
import os
from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Tuple

from src.core.constants import MAX_RELATION_SIZE, MIN_PROBLEM_SIZE
from src.core.logger import get_logger
from src.model.intensity import (
    IntensityValidationError, RankingError, ValidationReport, intensity_from_ranking,
    object_name, pair_count
)
from src.model.profile import Profile


class ProfileFormatError(ValueError):
    """A profile document that cannot be turned into a Profile."""


class ProfileSchemaError(ProfileFormatError):
    """Structural problem; `path` locates the offending field or line."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


class ProfileAxiomError(ProfileFormatError):
    """An agent's ranking is well formed but violates an axiom."""

    def __init__(self, agent_id: Any, report: ValidationReport, n: int):
        self.agent_id = agent_id
        self.report = report
        super().__init__(f"agent {agent_id}: {report.describe(n)}")


@dataclass
class AgentEntry:
    id: Any
    ranking: List[Tuple[str, str]] = field(default_factory=list)

    def to_dict(self) -> Dict:
        return {"id": self.id, "ranking": [list(p) for p in self.ranking]}


@dataclass
class ProfileDocument:
    """On-disk form of a profile: rankings listed best-first, objects named."""
    n: int
    objects: List[str]
    agents: List[AgentEntry]

    def to_dict(self) -> Dict:
        return {
            "n": self.n,
            "objects": list(self.objects),
            "agents": [a.to_dict() for a in self.agents],
        }

    @classmethod
    def from_dict(cls, data: Any) -> 'ProfileDocument':
        """Schema check with a field path in every error."""
        if not isinstance(data, dict):
            raise ProfileSchemaError("$", "document must be a JSON object")
        for key in ("n", "objects", "agents"):
            if key not in data:
                raise ProfileSchemaError(f"$.{key}", "missing field")

        n = data["n"]
        if (not isinstance(n, int) or isinstance(n, bool)
                or not MIN_PROBLEM_SIZE <= n <= MAX_RELATION_SIZE):
            raise ProfileSchemaError(
                "$.n", f"must be an integer in {MIN_PROBLEM_SIZE}..{MAX_RELATION_SIZE}, got {n!r}")

        objects = data["objects"]
        if not isinstance(objects, list) or len(objects) != n:
            raise ProfileSchemaError("$.objects", f"must list exactly {n} names")
        for i, name in enumerate(objects):
            if not isinstance(name, str) or not name:
                raise ProfileSchemaError(f"$.objects[{i}]", "must be a non-empty string")
        if len(set(objects)) != n:
            raise ProfileSchemaError("$.objects", "names must be distinct")

        agents = data["agents"]
        if not isinstance(agents, list):
            raise ProfileSchemaError("$.agents", "must be a list")
        if len(agents) != n:
            raise ProfileSchemaError("$.agents", f"agents length must equal n ({len(agents)} != {n})")

        k = pair_count(n)
        entries = []
        for i, agent in enumerate(agents):
            where = f"$.agents[{i}]"
            if not isinstance(agent, dict) or "ranking" not in agent:
                raise ProfileSchemaError(where, "must be an object with a ranking")
            ranking = agent["ranking"]
            if not isinstance(ranking, list) or len(ranking) != k:
                raise ProfileSchemaError(f"{where}.ranking", f"must list exactly {k} pairs")
            pairs = []
            for r, pair in enumerate(ranking):
                if (not isinstance(pair, list) or len(pair) != 2
                        or not all(isinstance(o, str) and o in objects for o in pair)):
                    raise ProfileSchemaError(f"{where}.ranking[{r}]",
                                             f"must be a pair of object names, got {pair!r}")
                pairs.append((pair[0], pair[1]))
            entries.append(AgentEntry(agent.get("id", i + 1), pairs))
        return cls(n, list(objects), entries)

    def to_profile(self) -> Profile:
        index = {name: i for i, name in enumerate(self.objects)}
        agents = []
        for position, agent in enumerate(self.agents):
            pairs = [(index[a], index[b]) for a, b in agent.ranking]
            try:
                agents.append(intensity_from_ranking(pairs, self.n))
            except RankingError as e:
                raise ProfileSchemaError(f"$.agents[{position}].ranking", str(e)) from e
            except IntensityValidationError as e:
                raise ProfileAxiomError(agent.id, e.report, self.n) from e
        return Profile(self.n, tuple(agents))

    @classmethod
    def from_profile(cls, profile: Profile) -> 'ProfileDocument':
        n = profile.n
        names = [object_name(o, n) for o in range(n)]
        agents = [AgentEntry(i + 1, [(names[a], names[b]) for a, b in ranking])
                  for i, ranking in enumerate(profile.rankings())]
        return cls(n, names, agents)


# =============================================================================
# PARSE / SERIALIZE
# =============================================================================
def parse_profile_dict(data: Mapping) -> Profile:
    return ProfileDocument.from_dict(data).to_profile()


def parse_profile(text: str) -> Profile:
    """
    Parse a UTF-8 JSON profile document.

    Raises:
        ProfileSchemaError: malformed JSON (with line/column) or schema violation (with field path)
        ProfileAxiomError: an agent's ranking breaks an axiom
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ProfileSchemaError(f"line {e.lineno} column {e.colno}", e.msg) from e
    return parse_profile_dict(data)


def profile_to_dict(profile: Profile) -> Dict:
    return ProfileDocument.from_profile(profile).to_dict()


def serialize_profile(profile: Profile) -> str:
    """Normalized text: canonical object names, ids 1..n, one pair per line."""
    doc = ProfileDocument.from_profile(profile)
    lines = ["{", f'  "n": {doc.n},', f'  "objects": {json.dumps(doc.objects)},', '  "agents": [']
    for i, agent in enumerate(doc.agents):
        pairs = ",\n".join(f"        {json.dumps(list(p))}" for p in agent.ranking)
        closing = "    }," if i < len(doc.agents) - 1 else "    }"
        lines += ["    {", f'      "id": {json.dumps(agent.id)},', '      "ranking": [',
                  pairs, "      ]", closing]
    lines += ["  ]", "}"]
    return "\n".join(lines) + "\n"


def load_profile(path: str) -> Profile:
    try:
        with open(path, 'r', encoding='utf-8') as f:
            text = f.read()
    except FileNotFoundError:
        get_logger().error(f"Profile file not found: {path}")
        raise
    except OSError as e:
        get_logger().error(f"Failed to read profile {path}: {e}", exc_info=True)
        raise
    try:
        profile = parse_profile(text)
    except ProfileFormatError as e:
        get_logger().error(f"Invalid profile file {path}: {e}")
        raise
    get_logger().debug(f"Loaded n={profile.n} profile from {path}")
    return profile


def save_profile(profile: Profile, path: str):
    try:
        os.makedirs(os.path.dirname(path) if os.path.dirname(path) else '.', exist_ok=True)
        with open(path, 'w', encoding='utf-8') as f:
            f.write(serialize_profile(profile))
        get_logger().info(f"Saved profile to {path}")
    except OSError as e:
        get_logger().error(f"Failed to write profile {path}: {e}", exc_info=True)
        raise


# =============================================================================
# REPORTS
# =============================================================================
def analysis_to_dict(summary) -> Dict:
    """JSON-ready form of an AnalysisSummary."""
    return {
        "n": summary.profile.n,
        "pareto": [x.label() for x in summary.pareto],
        "edges": [[x.label(), y.label()] for x, y in summary.digraph.edges],
        "intensity_efficient": [x.label() for x in summary.efficient],
        "dominated_by": {y.label(): [x.label() for x in xs] for y, xs in summary.dominated.items()},
        "discarded_fraction": str(summary.discarded_fraction),
        "cycle": [x.label() for x in summary.cycle] if summary.cycle else None,
    }


def report_to_json(report) -> str:
    return json.dumps(report.to_dict(), indent=2) + "\n"
