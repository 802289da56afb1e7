"""
Intensity Efficiency - Constants and Configuration
Problem-size limits, published counts, sweep defaults and the reference profiles
"""

from enum import Enum, IntEnum
from typing import Dict, List, Tuple

# =============================================================================
# PROBLEM SIZE LIMITS
# =============================================================================
MIN_PROBLEM_SIZE = 3
MAX_ORDER_SIZE = 8          # n! preference orders / allocations
MAX_RELATION_SIZE = 6       # enumeration of all intensity relations
MAX_CACHED_RELATION_SIZE = 5  # relation lists held in memory and indexed
MAX_SYMMETRY_SIZE = 4       # explicit orbit minimization over n! relabelings
RANDOM_SWEEP_SIZES = (4, 5, 6)

# Published number of strict intensity relations per n
RELATION_COUNTS: Dict[int, int] = {
    3: 12,
    4: 384,
    5: 92_160,
}

# =============================================================================
# SWEEP SETTINGS
# =============================================================================
# Largest R^n a full sweep may visit without symmetry reduction
DEFAULT_FULL_BUDGET = 10_000_000
DEFAULT_CHUNK_SIZE = 4096
DEFAULT_JOBS = 1


class IterationMode(Enum):
    FULL = "full"
    SYMMETRY = "symmetry"
    RANDOM = "random"


# =============================================================================
# EXIT CODES
# =============================================================================
class ExitCode(IntEnum):
    SUCCESS = 0          # property holds
    USAGE_ERROR = 1      # bad flags, unreadable or invalid input
    VIOLATED = 2         # property violated / counterexample found


# =============================================================================
# WORKED EXAMPLE (identical preferences a > b > c)
# =============================================================================
IDENTICAL_ORDER_RANKINGS: List[List[Tuple[str, str]]] = [
    [("a", "c"), ("a", "b"), ("b", "c")],
    [("a", "c"), ("b", "c"), ("a", "b")],
    [("a", "c"), ("a", "b"), ("b", "c")],
]
IDENTICAL_ORDER_EFFICIENT = ("abc", "cba")

# =============================================================================
# n = 5 COUNTEREXAMPLE
# =============================================================================
# Columns for agents 1-3, intensity 10 down to 1
COUNTEREXAMPLE_RANKINGS: List[List[Tuple[str, str]]] = [
    [("a", "e"), ("a", "d"), ("b", "e"), ("b", "d"), ("a", "c"),
     ("c", "e"), ("a", "b"), ("b", "c"), ("c", "d"), ("d", "e")],
    [("a", "e"), ("a", "d"), ("b", "e"), ("a", "c"), ("b", "d"),
     ("c", "e"), ("c", "d"), ("a", "b"), ("b", "c"), ("d", "e")],
    [("a", "e"), ("a", "d"), ("a", "c"), ("b", "e"), ("b", "d"),
     ("c", "e"), ("c", "d"), ("d", "e"), ("a", "b"), ("b", "c")],
]

# Agents 4 and 5 are only pinned by their top choice
COUNTEREXAMPLE_AGENT4_TOP = "d"
COUNTEREXAMPLE_AGENT5_TOP = "c"

# Agent 4: d > a > b > c > e, so (d,e) spans the whole order and gets 10
DEFAULT_AGENT4_RANKING: List[Tuple[str, str]] = [
    ("d", "e"), ("d", "c"), ("a", "e"), ("d", "b"), ("a", "c"),
    ("b", "e"), ("d", "a"), ("a", "b"), ("b", "c"), ("c", "e"),
]

# Agent 5: c > e > a > b > d with (c,e) ranked last
DEFAULT_AGENT5_RANKING: List[Tuple[str, str]] = [
    ("c", "d"), ("c", "b"), ("e", "d"), ("c", "a"), ("e", "b"),
    ("a", "d"), ("e", "a"), ("b", "d"), ("a", "b"), ("c", "e"),
]

# The six listed Pareto-efficient allocations
COUNTEREXAMPLE_ALLOCATIONS: Dict[str, str] = {
    "s": "cabde",
    "t": "cbade",
    "x": "abcde",
    "y": "acbde",
    "w": "bcade",
    "z": "bacde",
}

# Cycle s D t D x D y D w D z D s
COUNTEREXAMPLE_CYCLE: Tuple[str, ...] = ("s", "t", "x", "y", "w", "z")

# (dominator, dominated, (stronger agent, weaker agent, a, b)) meaning
# s_stronger(a, b) > s_weaker(a, b); agents are 1-based as printed
COUNTEREXAMPLE_CITED_EDGES: List[Tuple[str, str, Tuple[int, int, str, str]]] = [
    ("z", "s", (1, 3, "b", "c")),
    ("w", "z", (3, 2, "a", "c")),
    ("y", "w", (1, 3, "a", "b")),
    ("x", "y", (2, 3, "b", "c")),
    ("t", "x", (3, 1, "a", "c")),
    ("s", "t", (2, 3, "a", "b")),
]

# =============================================================================
# FILES
# =============================================================================
PROFILE_DIR = "profiles"
LOG_DIR = "logs"
SETTINGS_FILE = "settings.json"
