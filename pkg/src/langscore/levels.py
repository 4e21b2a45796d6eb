"""The four-level qualitative rating scale and its numeric mapping."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field


@enum.unique
class Level(enum.IntEnum):
    """Ordered qualitative conformance levels: NO < PARTIALLY < MOSTLY < FULLY.

    The integer values encode the order only; scores come from a RatingScale.
    """

    NO = 0
    PARTIALLY = 1
    MOSTLY = 2
    FULLY = 3

    @property
    def token(self) -> str:
        """Canonical serialized form ("no", "partially", "mostly", "fully")."""
        return self.name.lower()


# Spellings accepted on input. Files are always written with canonical tokens;
# these aliases cover the looser forms found in source material ("Full",
# "Mostly supported", ...).
LEVEL_ALIASES: dict[str, Level] = {
    "no": Level.NO,
    "not supported": Level.NO,
    "none": Level.NO,
    "partially": Level.PARTIALLY,
    "partial": Level.PARTIALLY,
    "partially supported": Level.PARTIALLY,
    "mostly": Level.MOSTLY,
    "mostly supported": Level.MOSTLY,
    "fully": Level.FULLY,
    "full": Level.FULLY,
    "fully supported": Level.FULLY,
}


def parse_level(text: str) -> Level:
    """Canonicalize a level spelling. Raises ValueError on unknown text."""
    try:
        return LEVEL_ALIASES[text.strip().lower()]
    except KeyError:
        raise ValueError(
            f"unknown qualitative level {text!r}; expected one of "
            "fully/mostly/partially/no (or a documented alias)"
        ) from None


@dataclass(frozen=True)
class RatingScale:
    """Mapping from qualitative levels to unit scores in [0, 1].

    Invariants, enforced at construction:
      * all four levels mapped,
      * strictly increasing with the level order,
      * NO maps to 0 and FULLY maps to 1.
    """

    scores: dict[Level, float] = field(
        default_factory=lambda: {
            Level.FULLY: 1.0,
            Level.MOSTLY: 0.70,
            Level.PARTIALLY: 0.40,
            Level.NO: 0.0,
        }
    )

    def __post_init__(self) -> None:
        if set(self.scores) != set(Level):
            raise ValueError("scale must map exactly the four levels")
        ordered = [self.scores[level] for level in sorted(Level)]
        if any(b <= a for a, b in zip(ordered, ordered[1:])):
            raise ValueError(f"scale must be strictly increasing, got {ordered}")
        if self.scores[Level.NO] != 0.0 or self.scores[Level.FULLY] != 1.0:
            raise ValueError("scale must anchor NO at 0 and FULLY at 1")

    def score(self, level: Level) -> float:
        return self.scores[level]

    def to_json(self) -> dict[str, float]:
        return {level.token: self.scores[level] for level in sorted(Level)}

    @classmethod
    def from_json(cls, data: dict[str, float]) -> "RatingScale":
        scores = {parse_level(token): float(value) for token, value in data.items()}
        if len(scores) != len(data):
            raise ValueError("duplicate level tokens in scale")
        return cls(scores=scores)


DEFAULT_SCALE = RatingScale()


def map_level(level: Level, scale: RatingScale = DEFAULT_SCALE) -> float:
    """Unit score for a qualitative level under the given scale."""
    return scale.score(level)


def list_levels(scale: RatingScale = DEFAULT_SCALE) -> list[tuple[Level, float]]:
    """All (level, score) pairs in ascending level order."""
    return [(level, scale.score(level)) for level in sorted(Level)]
