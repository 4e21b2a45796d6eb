"""Criteria catalog: parameters, sub-parameters, subjects, ratings, weights.

Everything here is immutable after construction and safe to share across
threads. Construction enforces structural invariants (id uniqueness, value
ranges with an unambiguous right answer); dataset-level coherence checks
(cell coverage, weight positivity, cross-references) live in
`langscore.dataset.validate_dataset`, which reports violations instead of
raising, so a broken dataset can still be loaded and inspected.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal, Optional, Union

from .levels import Level, RatingScale

Category = Literal["technical", "environmental"]
ScoreMode = Literal["aggregate-sub-ratings", "direct-override"]
SubKind = Literal["qualitative", "quantitative-raw"]
Provenance = Literal["paper", "editorial", "inferred", "user"]

PROVENANCE_VALUES = ("paper", "editorial", "inferred", "user")


@dataclass(frozen=True)
class SubParameter:
    """One rated facet of a parameter."""

    id: str
    name: str
    kind: SubKind = "qualitative"

    def __post_init__(self) -> None:
        if not self.id:
            raise ValueError("sub-parameter id must be non-empty")
        if self.kind not in ("qualitative", "quantitative-raw"):
            raise ValueError(f"unknown sub-parameter kind {self.kind!r}")


@dataclass(frozen=True)
class Parameter:
    """A top-level evaluation criterion.

    `score_mode` selects how the unit score is obtained:
      * "aggregate-sub-ratings": mean of the mapped sub-parameter scores
        (or max-normalized means for quantitative-raw sub-parameters, which
        are fed by the demand snapshot);
      * "direct-override": the dataset supplies the unit score itself, one
        rating per subject with no sub-parameter id. Used where no per-facet
        ratings exist; such scores carry their own provenance tag.
    """

    id: str
    name: str
    category: Category
    sub_parameters: tuple[SubParameter, ...]
    score_mode: ScoreMode = "aggregate-sub-ratings"

    def __post_init__(self) -> None:
        if not self.id:
            raise ValueError("parameter id must be non-empty")
        if self.category not in ("technical", "environmental"):
            raise ValueError(f"unknown category {self.category!r}")
        if self.score_mode not in ("aggregate-sub-ratings", "direct-override"):
            raise ValueError(f"unknown score_mode {self.score_mode!r}")
        if len(self.sub_parameters) < 1:
            raise ValueError(f"parameter {self.id!r} must declare >=1 sub-parameter")
        ids = [sub.id for sub in self.sub_parameters]
        if len(set(ids)) != len(ids):
            raise ValueError(f"duplicate sub-parameter ids in parameter {self.id!r}")
        kinds = {sub.kind for sub in self.sub_parameters}
        if len(kinds) > 1:
            raise ValueError(
                f"sub-parameters of {self.id!r} must all share one kind, got {sorted(kinds)}"
            )

    @property
    def kind(self) -> SubKind:
        """Kind shared by all sub-parameters."""
        return self.sub_parameters[0].kind

    def sub(self, sub_id: str) -> SubParameter:
        for sub in self.sub_parameters:
            if sub.id == sub_id:
                return sub
        raise KeyError(sub_id)


@dataclass(frozen=True)
class Framework:
    """The full criteria catalog: a rating scale plus an ordered parameter list."""

    scale: RatingScale
    parameters: tuple[Parameter, ...]

    def __post_init__(self) -> None:
        if len(self.parameters) < 1:
            raise ValueError("framework must contain >=1 parameter")
        ids = [p.id for p in self.parameters]
        if len(set(ids)) != len(ids):
            dupes = sorted({i for i in ids if ids.count(i) > 1})
            raise ValueError(f"duplicate parameter ids: {dupes}")

    @property
    def n(self) -> int:
        return len(self.parameters)

    @property
    def technical(self) -> tuple[Parameter, ...]:
        return tuple(p for p in self.parameters if p.category == "technical")

    @property
    def environmental(self) -> tuple[Parameter, ...]:
        return tuple(p for p in self.parameters if p.category == "environmental")

    def parameter(self, parameter_id: str) -> Parameter:
        for p in self.parameters:
            if p.id == parameter_id:
                return p
        raise KeyError(parameter_id)

    def __contains__(self, parameter_id: str) -> bool:
        return any(p.id == parameter_id for p in self.parameters)


@dataclass(frozen=True)
class SubjectAttributes:
    """Advisory transition attributes used by the cost-vector generator."""

    paradigm: str
    typing: Literal["static", "dynamic"]
    strength: Literal["strong", "weak"]

    def __post_init__(self) -> None:
        if self.typing not in ("static", "dynamic"):
            raise ValueError(f"typing must be static|dynamic, got {self.typing!r}")
        if self.strength not in ("strong", "weak"):
            raise ValueError(f"strength must be strong|weak, got {self.strength!r}")


@dataclass(frozen=True)
class Subject:
    """An evaluated alternative (a language, in the bundled dataset)."""

    id: str
    name: str
    attributes: Optional[SubjectAttributes] = None

    def __post_init__(self) -> None:
        if not self.id:
            raise ValueError("subject id must be non-empty")


RatingValue = Union[Level, float]


@dataclass(frozen=True)
class Rating:
    """One cell: a qualitative level for an aggregate-mode sub-parameter, or a
    direct unit score for a direct-override parameter (sub_parameter None).

    Every cell carries a provenance tag so consumers can tell source-published
    values from editorial reconstructions and user edits.
    """

    subject: str
    parameter: str
    sub_parameter: Optional[str]
    value: RatingValue
    provenance: Provenance = "user"

    def __post_init__(self) -> None:
        if self.provenance not in PROVENANCE_VALUES:
            raise ValueError(f"unknown provenance {self.provenance!r}")
        if isinstance(self.value, bool) or not isinstance(self.value, (Level, int, float)):
            raise ValueError(f"rating value must be a Level or a number, got {self.value!r}")
        if not isinstance(self.value, Level):
            object.__setattr__(self, "value", float(self.value))
            if self.sub_parameter is None and not 0.0 <= self.value <= 1.0:
                raise ValueError(
                    f"direct unit score must lie in [0,1], got {self.value} "
                    f"({self.subject}/{self.parameter})"
                )

    @property
    def is_level(self) -> bool:
        return isinstance(self.value, Level)


@dataclass(frozen=True)
class WeightProfile:
    """Per-parameter weights. Positivity and coverage are validator concerns,
    so a profile with a bad weight is constructible and reportable."""

    name: str
    weights: dict[str, float] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not self.name:
            raise ValueError("weight profile name must be non-empty")
        object.__setattr__(
            self, "weights", {k: float(v) for k, v in self.weights.items()}
        )

    def weight(self, parameter_id: str) -> float:
        return self.weights[parameter_id]

    def total(self, parameter_ids: list[str] | tuple[str, ...]) -> float:
        return sum(self.weights[p] for p in parameter_ids)

    def scaled(self, factor: float) -> "WeightProfile":
        return WeightProfile(
            name=f"{self.name}*{factor:g}",
            weights={k: v * factor for k, v in self.weights.items()},
        )


def default_profile(framework: Framework, name: str = "default") -> WeightProfile:
    """Unit weight for every parameter."""
    return WeightProfile(name=name, weights={p.id: 1.0 for p in framework.parameters})
