"""Pairwise language-transition costs and the transferability rating.

The canonical cost source is an explicit directed pairwise matrix: each
ordered (from, to) pair of distinct subjects carries three 0/1 unit costs
(paradigm shift, static-to-dynamic typing, strong-to-weak typing). A
rule-based generator over subject attributes is provided as an optional
convenience, but the bundled matrix is data: it contains cells the rules do
not produce, so the matrix always wins.

A subject's total cost is the sum over its row; totals map to qualitative
transferability ratings through thresholds expressed in the number of
subjects N: FULLY when total <= 2N, MOSTLY up to 2.5N, PARTIALLY up to 3N,
NO above that. Boundary totals take the better rating.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import MissingAttributesError, UnknownSubjectError
from .framework import Subject
from .levels import Level

ZERO_COST = (0, 0, 0)

COST_DIMENSIONS = ("paradigm-shift", "static-to-dynamic", "strong-to-weak")


@dataclass(frozen=True)
class CostVector:
    """Three 0/1 unit-cost indicators for one directed transition."""

    paradigm_shift: int
    static_to_dynamic: int
    strong_to_weak: int

    def __post_init__(self) -> None:
        for name in ("paradigm_shift", "static_to_dynamic", "strong_to_weak"):
            value = getattr(self, name)
            if value not in (0, 1):
                raise ValueError(f"cost component {name} must be 0 or 1, got {value!r}")

    @property
    def components(self) -> tuple[int, int, int]:
        return (self.paradigm_shift, self.static_to_dynamic, self.strong_to_weak)

    @property
    def total(self) -> int:
        return sum(self.components)


ZERO_VECTOR = CostVector(0, 0, 0)


@dataclass(frozen=True)
class TransitionCostMatrix:
    """Directed cost vectors for every ordered pair of distinct subjects.

    The diagonal is implicitly zero. Completeness over a subject universe is
    checked by the dataset validator; the matrix itself only rejects
    duplicate pairs and self-pairs.
    """

    costs: dict[tuple[str, str], CostVector]

    def __post_init__(self) -> None:
        for source, target in self.costs:
            if source == target:
                raise ValueError(f"self-pair ({source!r}, {target!r}) not allowed")

    @property
    def subjects(self) -> tuple[str, ...]:
        seen: dict[str, None] = {}
        for source, target in self.costs:
            seen.setdefault(source)
            seen.setdefault(target)
        return tuple(seen)

    @property
    def n(self) -> int:
        """Number of subjects the matrix spans."""
        return len(self.subjects)

    def asymmetric_pairs(self) -> list[tuple[str, str]]:
        """Ordered pairs whose reverse entry differs (reported, never enforced)."""
        out = []
        for (source, target), vector in self.costs.items():
            reverse = self.costs.get((target, source))
            if reverse is not None and reverse.components != vector.components and source < target:
                out.append((source, target))
        return sorted(out)

    def to_json(self) -> list[dict]:
        return [
            {"from": source, "to": target, "costs": list(vector.components)}
            for (source, target), vector in self.costs.items()
        ]

    @classmethod
    def from_json(cls, data: list[dict], location: str = "transition_costs") -> "TransitionCostMatrix":
        from .errors import DuplicateIdError, ParseError

        costs: dict[tuple[str, str], CostVector] = {}
        for i, raw in enumerate(data):
            where = f"{location}[{i}]"
            unknown = set(raw) - {"from", "to", "costs"}
            if unknown:
                raise ParseError(f"unknown fields {sorted(unknown)}", where)
            try:
                pair = (raw["from"], raw["to"])
                components = raw["costs"]
            except KeyError as exc:
                raise ParseError(f"missing field {exc}", where) from None
            if pair in costs:
                raise DuplicateIdError(f"duplicate transition pair {pair}", where)
            if len(components) != 3:
                raise ParseError(f"costs must have 3 components, got {len(components)}", where)
            try:
                costs[pair] = CostVector(*components)
            except ValueError as exc:
                raise ParseError(str(exc), where) from None
        return cls(costs=costs)


def pair_cost(source: str, target: str, matrix: TransitionCostMatrix) -> CostVector:
    """Stored vector for (source, target); the self-pair is the zero vector."""
    if source == target:
        if source not in matrix.subjects:
            raise UnknownSubjectError(f"unknown subject {source!r} in transition matrix")
        return ZERO_VECTOR
    try:
        return matrix.costs[(source, target)]
    except KeyError:
        for subject in (source, target):
            if subject not in matrix.subjects:
                raise UnknownSubjectError(
                    f"unknown subject {subject!r} in transition matrix"
                ) from None
        raise UnknownSubjectError(f"no transition entry for ({source!r}, {target!r})") from None


def total_cost(subject: str, matrix: TransitionCostMatrix) -> int:
    """Sum of all cost components from `subject` to every other subject."""
    return sum(
        pair_cost(subject, other, matrix).total
        for other in matrix.subjects
        if other != subject
    )


def cost_rating(total: int, n: int) -> Level:
    """Map a total transition cost to a transferability level.

    Thresholds are 2N / 2.5N / 3N with boundaries belonging to the better
    rating.
    """
    if n < 1:
        raise ValueError(f"subject count must be >= 1, got {n}")
    if total < 0:
        raise ValueError(f"total cost must be >= 0, got {total}")
    if total <= 2 * n:
        return Level.FULLY
    if total <= 2.5 * n:
        return Level.MOSTLY
    if total <= 3 * n:
        return Level.PARTIALLY
    return Level.NO


def subject_rating(subject: str, matrix: TransitionCostMatrix) -> Level:
    """Transferability rating for one subject from its matrix row."""
    return cost_rating(total_cost(subject, matrix), matrix.n)


def derive_cost_vector(source: Subject, target: Subject) -> CostVector:
    """Rule-based cost vector from subject attributes.

    Components fire on: differing paradigm tags; static source to dynamic
    target; strong source to weak target. This generator does not reproduce
    every cell of the bundled matrix (which encodes judgment calls the rules
    cannot express); it exists for sketching matrices for new subjects.
    """
    for subject in (source, target):
        if subject.attributes is None:
            raise MissingAttributesError(
                f"subject {subject.id!r} has no transition attributes"
            )
    a, b = source.attributes, target.attributes
    return CostVector(
        paradigm_shift=int(a.paradigm != b.paradigm),
        static_to_dynamic=int(a.typing == "static" and b.typing == "dynamic"),
        strong_to_weak=int(a.strength == "strong" and b.strength == "weak"),
    )
