"""
Intensity Efficiency - Canonical Strict Preference-Intensity Relations
Core domain types, the pair-indexing contract and axiom validation
"""

from dataclasses import dataclass, field
from enum import Enum
from math import comb
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np

ObjectId = int
OrderedPair = Tuple[ObjectId, ObjectId]

_LETTERS = "abcdefghijklmnopqrstuvwxyz"


# =============================================================================
# ERRORS
# =============================================================================
class IncompleteIntensityError(ValueError):
    """A raw intensity map is missing ordered pairs."""

    def __init__(self, missing: List[OrderedPair], n: int):
        self.missing = missing
        names = ", ".join(pair_name(p, n) for p in missing[:5])
        more = f" (+{len(missing) - 5} more)" if len(missing) > 5 else ""
        super().__init__(f"incomplete map: missing {names}{more}")


class RankingError(ValueError):
    """A pair ranking does not list every unordered pair exactly once."""


class IntensityValidationError(ValueError):
    """A complete map violates at least one axiom."""

    def __init__(self, report: 'ValidationReport', n: int):
        self.report = report
        super().__init__(report.describe(n))


# =============================================================================
# OBJECT NAMES AND PAIR INDEXING
# =============================================================================
def object_name(index: ObjectId, n: int) -> str:
    """Display name: a, b, c, ... for n <= 26, otherwise o0, o1, ..."""
    if not 0 <= index < n:
        raise ValueError(f"object index {index} out of range for n={n}")
    if n <= len(_LETTERS):
        return _LETTERS[index]
    return f"o{index}"


def object_index(name: str, n: int) -> ObjectId:
    if n <= len(_LETTERS):
        index = _LETTERS.find(name) if len(name) == 1 else -1
    else:
        index = int(name[1:]) if name.startswith("o") and name[1:].isdigit() else -1
    if not 0 <= index < n:
        raise ValueError(f"unknown object name {name!r} for n={n}")
    return index


def pair_name(pair: OrderedPair, n: int) -> str:
    return f"({object_name(pair[0], n)},{object_name(pair[1], n)})"


def pair_count(n: int) -> int:
    """k = C(n, 2), the number of unordered pairs."""
    return comb(n, 2)


def pair_index(first: ObjectId, second: ObjectId, n: int) -> int:
    """Position of an off-diagonal ordered pair, lexicographic over (first, second)."""
    return first * (n - 1) + (second if second < first else second - 1)


def ordered_pairs(n: int) -> List[OrderedPair]:
    """All off-diagonal ordered pairs in pair_index order."""
    return [(a, b) for a in range(n) for b in range(n) if a != b]


# =============================================================================
# VALIDATION
# =============================================================================
class Axiom(Enum):
    SKEW_SYMMETRY = "skew-symmetry"
    CANONICAL_RANGE = "canonical-range"
    STRICTNESS = "strictness"
    CHAIN = "chain"


@dataclass(frozen=True)
class Violation:
    axiom: Axiom
    witness: Tuple

    def describe(self, n: int) -> str:
        if self.axiom == Axiom.CHAIN:
            names = ",".join(object_name(o, n) for o in self.witness)
            return f"{self.axiom.value} ({names})"
        pairs = " ".join(pair_name(p, n) for p in self.witness)
        return f"{self.axiom.value} {pairs}"


@dataclass
class ValidationReport:
    violations: List[Violation] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations

    def of_axiom(self, axiom: Axiom) -> List[Violation]:
        return [v for v in self.violations if v.axiom == axiom]

    def describe(self, n: int) -> str:
        if self.valid:
            return "valid"
        return "; ".join(v.describe(n) for v in self.violations)


def validate_intensity(raw: Mapping[OrderedPair, int], n: int) -> ValidationReport:
    """
    Check a raw map from ordered pairs to integers against the axioms of a
    canonical strict intensity relation. Every violation is reported.

    Raises:
        IncompleteIntensityError: if an off-diagonal pair has no value
    """
    missing = [p for p in ordered_pairs(n) if p not in raw]
    if missing:
        raise IncompleteIntensityError(missing, n)

    k = pair_count(n)
    report = ValidationReport()

    for a in range(n):
        if raw.get((a, a), 0) != 0:
            report.violations.append(Violation(Axiom.SKEW_SYMMETRY, ((a, a),)))
        for b in range(a + 1, n):
            if raw[(b, a)] != -raw[(a, b)]:
                report.violations.append(Violation(Axiom.SKEW_SYMMETRY, ((a, b), (b, a))))

    for pair in ordered_pairs(n):
        value = raw[pair]
        if value == 0 or not -k <= value <= k:
            report.violations.append(Violation(Axiom.CANONICAL_RANGE, (pair,)))

    # Positive values must be pairwise distinct; with the range check this
    # makes them a bijection onto 1..k
    seen: Dict[int, OrderedPair] = {}
    for pair in ordered_pairs(n):
        value = raw[pair]
        if value <= 0:
            continue
        if value in seen:
            report.violations.append(Violation(Axiom.STRICTNESS, (seen[value], pair)))
        else:
            seen[value] = pair

    for a in range(n):
        for b in range(n):
            if b == a or raw[(a, b)] <= 0:
                continue
            for c in range(n):
                if c == a or c == b or raw[(b, c)] <= 0:
                    continue
                if raw[(a, c)] <= max(raw[(a, b)], raw[(b, c)]):
                    report.violations.append(Violation(Axiom.CHAIN, (a, b, c)))

    return report


# =============================================================================
# DOMAIN TYPES
# =============================================================================
@dataclass(frozen=True)
class PreferenceOrder:
    """A strict total order over objects, best first."""
    ranking: Tuple[ObjectId, ...]

    def __post_init__(self):
        if sorted(self.ranking) != list(range(len(self.ranking))):
            raise ValueError(f"not a total order over objects: {self.ranking}")

    @property
    def n(self) -> int:
        return len(self.ranking)

    @property
    def top(self) -> ObjectId:
        return self.ranking[0]

    def position(self, obj: ObjectId) -> int:
        return self.ranking.index(obj)

    def prefers(self, a: ObjectId, b: ObjectId) -> bool:
        return self.position(a) < self.position(b)

    def names(self) -> List[str]:
        return [object_name(o, self.n) for o in self.ranking]

    def __str__(self) -> str:
        return " > ".join(self.names())


class CanonicalIntensity:
    """
    One agent's strict intensity relation in canonical form.

    Values are stored as a flat read-only array indexed by pair_index; the
    diagonal is implicit and always 0.
    """

    def __init__(self, n: int, values: Sequence[int], check: bool = True):
        self.n = n
        self.k = pair_count(n)
        raw = np.asarray(values)
        if raw.shape != (n * (n - 1),):
            raise ValueError(f"expected {n * (n - 1)} values for n={n}, got {raw.shape}")
        if raw.dtype.kind not in "iuO":
            raise ValueError(f"intensity values must be integers, got dtype {raw.dtype}")

        # Validate before narrowing to int16 so out-of-range input cannot wrap
        if check:
            report = validate_intensity(dict(zip(ordered_pairs(n), (int(v) for v in raw))), n)
            if not report.valid:
                raise IntensityValidationError(report, n)

        array = raw.astype(np.int16, copy=False)
        array.flags.writeable = False
        self.values = array

        matrix = np.zeros((n, n), dtype=np.int16)
        matrix[~np.eye(n, dtype=bool)] = array
        matrix.flags.writeable = False
        self.matrix = matrix
        self._key = array.tobytes()

    @classmethod
    def from_map(cls, raw: Mapping[OrderedPair, int], n: int) -> 'CanonicalIntensity':
        return cls(n, [raw[p] for p in ordered_pairs(n)])

    def value(self, a: ObjectId, b: ObjectId) -> int:
        return int(self.matrix[a, b])

    def to_map(self) -> Dict[OrderedPair, int]:
        return {p: int(v) for p, v in zip(ordered_pairs(self.n), self.values)}

    def ranking(self) -> List[OrderedPair]:
        """Positive pairs in descending intensity (value k first)."""
        positive = [(int(v), p) for p, v in zip(ordered_pairs(self.n), self.values) if v > 0]
        return [p for _, p in sorted(positive, reverse=True)]

    def preference(self) -> PreferenceOrder:
        return induced_preference(self)

    def relabel(self, perm: Sequence[ObjectId]) -> 'CanonicalIntensity':
        """The relation with object o renamed perm[o]."""
        perm = np.asarray(perm)
        matrix = np.zeros_like(self.matrix)
        matrix[np.ix_(perm, perm)] = self.matrix
        return CanonicalIntensity(self.n, matrix[~np.eye(self.n, dtype=bool)], check=False)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CanonicalIntensity):
            return NotImplemented
        return self.n == other.n and self._key == other._key

    def __hash__(self) -> int:
        return hash((self.n, self._key))

    def __repr__(self) -> str:
        pairs = ">".join(f"{object_name(a, self.n)}{object_name(b, self.n)}"
                         for a, b in self.ranking())
        return f"CanonicalIntensity(n={self.n}, {pairs})"


# =============================================================================
# OPERATIONS
# =============================================================================
def induced_preference(s: CanonicalIntensity) -> PreferenceOrder:
    """Total order with a before b iff s(a, b) > 0."""
    wins = (s.matrix > 0).sum(axis=1)
    ranking = sorted(range(s.n), key=lambda o: -wins[o])
    return PreferenceOrder(tuple(ranking))


def intensity_from_ranking(pairs: Sequence[OrderedPair], n: int) -> CanonicalIntensity:
    """
    Build a canonical relation from pairs listed in descending intensity.

    pairs[0] gets value k, pairs[k-1] gets 1; reversed pairs get the negatives.

    Raises:
        RankingError: if a pair is malformed, repeated or missing
        IntensityValidationError: if the ranking violates the chain condition
    """
    k = pair_count(n)
    seen: Dict[frozenset, OrderedPair] = {}
    for pair in pairs:
        if len(pair) != 2:
            raise RankingError(f"malformed pair {pair!r}")
        a, b = pair
        if not (0 <= a < n and 0 <= b < n) or a == b:
            raise RankingError(f"invalid pair {pair!r} for n={n}")
        key = frozenset(pair)
        if key in seen:
            raise RankingError(
                f"duplicate pair {pair_name(pair, n)} (already ranked as {pair_name(seen[key], n)})")
        seen[key] = (a, b)

    if len(seen) != k:
        missing = [(a, b) for a in range(n) for b in range(a + 1, n)
                   if frozenset((a, b)) not in seen]
        raise RankingError("missing pairs " + ", ".join(pair_name(p, n) for p in missing))

    raw: Dict[OrderedPair, int] = {}
    for position, (a, b) in enumerate(pairs):
        raw[(a, b)] = k - position
        raw[(b, a)] = -(k - position)

    report = validate_intensity(raw, n)
    if not report.valid:
        raise IntensityValidationError(report, n)
    return CanonicalIntensity(n, [raw[p] for p in ordered_pairs(n)], check=False)


def parse_named_pairs(named: Iterable[Sequence[str]], n: int) -> List[OrderedPair]:
    """Convert [("a", "c"), ...] into index pairs."""
    return [(object_index(p[0], n), object_index(p[1], n)) for p in named]


def intensity_from_names(named: Iterable[Sequence[str]], n: int) -> CanonicalIntensity:
    return intensity_from_ranking(parse_named_pairs(named, n), n)


def format_ranking_line(s: CanonicalIntensity, names: Optional[Sequence[str]] = None) -> str:
    """Ranking-line text form, e.g. 'ac>ab>bc'."""
    names = names or [object_name(o, s.n) for o in range(s.n)]
    return ">".join(f"{names[a]}{names[b]}" for a, b in s.ranking())


def parse_ranking_line(line: str, n: int) -> CanonicalIntensity:
    pairs = []
    for token in line.strip().split(">"):
        if len(token) != 2:
            raise RankingError(f"malformed pair token {token!r}")
        pairs.append((object_index(token[0], n), object_index(token[1], n)))
    return intensity_from_ranking(pairs, n)
