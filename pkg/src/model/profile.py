"""
Intensity Efficiency - Intensity Profiles
An n-tuple of canonical relations, one per agent
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from src.model.intensity import (
    CanonicalIntensity, ObjectId, PreferenceOrder, induced_preference, intensity_from_names
)


class ProfileShapeError(ValueError):
    """Agents disagree on n, or the number of agents is not n."""


@dataclass(frozen=True)
class Profile:
    """Intensity profile (s_1, ..., s_n) of a square assignment problem."""
    n: int
    agents: Tuple[CanonicalIntensity, ...]

    def __post_init__(self):
        if len(self.agents) != self.n:
            raise ProfileShapeError(f"agents length must equal n: {len(self.agents)} != {self.n}")
        for i, agent in enumerate(self.agents):
            if agent.n != self.n:
                raise ProfileShapeError(f"agent {i + 1} has n={agent.n}, expected {self.n}")

    @classmethod
    def of(cls, agents: Sequence[CanonicalIntensity]) -> 'Profile':
        agents = tuple(agents)
        n = agents[0].n if agents else 0
        return cls(n, agents)

    @classmethod
    def from_rankings(cls, rankings: Iterable[Iterable[Sequence[str]]], n: int) -> 'Profile':
        """Build from per-agent lists of named pairs in descending intensity."""
        return cls(n, tuple(intensity_from_names(r, n) for r in rankings))

    @cached_property
    def tensor(self) -> np.ndarray:
        """tensor[i, a, b] == s_i(a, b)."""
        return np.stack([agent.matrix for agent in self.agents])

    @cached_property
    def utilities(self) -> np.ndarray:
        """utilities[i, o]: number of objects agent i ranks below o."""
        return (self.tensor > 0).sum(axis=2)

    @cached_property
    def preferences(self) -> Tuple[PreferenceOrder, ...]:
        return tuple(induced_preference(agent) for agent in self.agents)

    def intensity(self, agent: int, a: ObjectId, b: ObjectId) -> int:
        """s_agent(a, b), agents 0-based."""
        return self.agents[agent].value(a, b)

    def prefers(self, agent: int, a: ObjectId, b: ObjectId) -> bool:
        return self.agents[agent].value(a, b) > 0

    def relabel_objects(self, perm: Sequence[ObjectId]) -> 'Profile':
        """Rename object o to perm[o] inside every agent's relation."""
        return Profile(self.n, tuple(agent.relabel(perm) for agent in self.agents))

    def permute_agents(self, order: Sequence[int]) -> 'Profile':
        """New agent i is old agent order[i]."""
        return Profile(self.n, tuple(self.agents[i] for i in order))

    def rankings(self) -> List[List[Tuple[ObjectId, ObjectId]]]:
        return [agent.ranking() for agent in self.agents]
