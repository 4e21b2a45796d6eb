"""What-if evaluation, weight sweeps, contributions, and rank stability.

Every operation here evaluates a *derived* view of the dataset (modified
weights, overridden cells, a category filter) and leaves the loaded dataset
untouched. Because the unbounded score is affine in any single weight,
crossover weights between subjects have a closed form; sweeps report both
the grid rankings and those closed-form crossovers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .dataset import Dataset
from .errors import UnknownOverrideTargetError
from .framework import WeightProfile
from .levels import Level
from .scoring import CategoryFilter, CATEGORY_FILTERS, ScoreCard, rank, score_subject


@dataclass(frozen=True)
class RatingOverride:
    """One cell override: a new level for a qualitative cell, a new unit
    score for a direct-override parameter, or a new raw value for a demand
    sub-feature."""

    subject: str
    parameter: str
    sub_parameter: Optional[str] = None
    level: Optional[Level] = None
    score: Optional[float] = None
    raw: Optional[float] = None

    def __post_init__(self) -> None:
        given = [v for v in (self.level, self.score, self.raw) if v is not None]
        if len(given) != 1:
            raise ValueError("override needs exactly one of level/score/raw")


@dataclass(frozen=True)
class WhatIfRequest:
    """A derived evaluation: base profile, weight and rating overrides, filter."""

    profile: str = "default"
    weights: dict[str, float] = field(default_factory=dict)
    overrides: tuple[RatingOverride, ...] = ()
    category: CategoryFilter = "all"

    def __post_init__(self) -> None:
        if self.category not in CATEGORY_FILTERS:
            raise ValueError(f"unknown category filter {self.category!r}")


@dataclass(frozen=True)
class WhatIfResult:
    profile: WeightProfile
    category: CategoryFilter
    scorecards: tuple[ScoreCard, ...]

    @property
    def ranking(self) -> tuple[str, ...]:
        return tuple(c.subject for c in self.scorecards)

    def card(self, subject: str) -> ScoreCard:
        for c in self.scorecards:
            if c.subject == subject:
                return c
        raise KeyError(subject)


def _effective_profile(dataset: Dataset, request: WhatIfRequest) -> WeightProfile:
    base = dataset.profile(request.profile)
    if not request.weights:
        return base
    weights = dict(base.weights)
    for parameter_id, weight in request.weights.items():
        if parameter_id not in dataset.framework:
            raise UnknownOverrideTargetError(f"unknown parameter {parameter_id!r} in weight override")
        if not weight > 0:
            raise ValueError(f"overridden weight for {parameter_id!r} must be > 0, got {weight}")
        weights[parameter_id] = float(weight)
    if weights == base.weights:
        # a full weight map restating the base profile is the base profile;
        # callers sending explicit defaults (the UI does) get identical
        # responses to the baseline, name included
        return base
    return WeightProfile(name=f"{base.name}+overrides", weights=weights)


def _apply_overrides(dataset: Dataset, overrides: tuple[RatingOverride, ...]) -> Dataset:
    if not overrides:
        return dataset
    cell_updates = {}
    derived = dataset
    for ov in overrides:
        if ov.subject not in dataset.subject_ids:
            raise UnknownOverrideTargetError(f"unknown subject {ov.subject!r} in rating override")
        if ov.parameter not in dataset.framework:
            raise UnknownOverrideTargetError(f"unknown parameter {ov.parameter!r} in rating override")
        parameter = dataset.framework.parameter(ov.parameter)
        if ov.raw is not None:
            if parameter.kind != "quantitative-raw" or ov.sub_parameter is None:
                raise UnknownOverrideTargetError(
                    f"raw override targets a quantitative sub-feature, not {ov.parameter!r}"
                )
            if dataset.demand is None:
                raise UnknownOverrideTargetError("dataset has no demand snapshot to override")
            if ov.raw < 0:
                raise ValueError(f"raw demand value must be >= 0, got {ov.raw}")
            try:
                derived = derived.with_demand(
                    derived.demand.with_value(ov.subject, ov.sub_parameter, ov.raw)
                )
            except KeyError:
                raise UnknownOverrideTargetError(
                    f"unknown demand sub-feature {ov.sub_parameter!r}"
                ) from None
            continue
        if ov.score is not None:
            if parameter.score_mode != "direct-override":
                raise UnknownOverrideTargetError(
                    f"unit-score override targets a direct-override parameter, not {ov.parameter!r}"
                )
            if not 0.0 <= ov.score <= 1.0:
                raise ValueError(f"override score must lie in [0,1], got {ov.score}")
            key = (ov.subject, ov.parameter, None)
            value = float(ov.score)
        else:
            if parameter.score_mode == "direct-override" or ov.sub_parameter is None:
                raise UnknownOverrideTargetError(
                    f"level override targets a qualitative cell; {ov.parameter!r} needs sub_parameter"
                )
            key = (ov.subject, ov.parameter, ov.sub_parameter)
            value = ov.level
        if dataset.cell(*key) is None:
            raise UnknownOverrideTargetError(f"no such cell: {key}")
        cell_updates[key] = value
    return derived.with_cell_values(cell_updates)


def what_if(dataset: Dataset, request: WhatIfRequest) -> WhatIfResult:
    """Score the dataset under modified weights/ratings/filter.

    The base dataset is never mutated; with an empty request the result is
    bit-identical to the baseline ranking.
    """
    profile = _effective_profile(dataset, request)
    derived = _apply_overrides(dataset, request.overrides)
    cards = rank(derived, profile, request.category)
    return WhatIfResult(profile=profile, category=request.category, scorecards=tuple(cards))


# ---------------------------------------------------------------------------
# Weight sweeps


@dataclass(frozen=True)
class Crossover:
    """Weight at which two subjects' unbounded scores coincide."""

    weight: float
    subjects: tuple[str, str]


@dataclass(frozen=True)
class SweepResult:
    parameter: str
    grid: tuple[float, ...]
    rankings: tuple[tuple[str, ...], ...]
    crossovers: tuple[Crossover, ...]

    def to_json(self) -> dict:
        return {
            "parameter": self.parameter,
            "grid": list(self.grid),
            "rankings": [list(r) for r in self.rankings],
            "crossovers": [
                {"weight": c.weight, "subjects": list(c.subjects)} for c in self.crossovers
            ],
        }


def _affine_terms(
    dataset: Dataset,
    parameter_id: str,
    profile: WeightProfile,
    category: CategoryFilter,
) -> dict[str, tuple[float, float, float, float]]:
    """Per subject: (base, slope, tech_base, tech_slope) of LS in the swept weight.

    base is the weighted sum over the other in-scope parameters; slope is the
    subject's unit score on the swept parameter (0 when it is out of scope).
    """
    terms = {}
    swept = dataset.framework.parameter(parameter_id)
    for subject in dataset.subject_ids:
        card = score_subject(dataset, subject, profile, category)
        if parameter_id in card.weights:
            unit = card.parameter_score(parameter_id).unit_score
            w0 = card.weights[parameter_id]
            base = card.ls - w0 * unit
            slope = unit
            tech_slope = unit if swept.category == "technical" else 0.0
            tech_base = card.ls_tech - w0 * tech_slope
        else:
            base, slope = card.ls, 0.0
            tech_base, tech_slope = card.ls_tech, 0.0
        terms[subject] = (base, slope, tech_base, tech_slope)
    return terms


def _ranking_at(terms: dict[str, tuple[float, float, float, float]], weight: float) -> tuple[str, ...]:
    # Bounded and unbounded orderings coincide at a fixed weight vector (one
    # shared divisor), so sorting on the affine LS reproduces rank().
    def key(subject: str):
        base, slope, tech_base, tech_slope = terms[subject]
        return (-(base + weight * slope), -(tech_base + weight * tech_slope), subject)

    return tuple(sorted(terms, key=key))


def weight_sweep(
    dataset: Dataset,
    parameter_id: str,
    w_min: float,
    w_max: float,
    steps: int,
    profile: Optional[WeightProfile] = None,
    category: CategoryFilter = "all",
) -> SweepResult:
    """Rankings over an inclusive weight grid plus closed-form crossovers.

    For subjects A and B the unbounded scores cross at
    w* = (base_B - base_A) / (slope_A - slope_B) when the slopes differ;
    only crossovers inside [w_min, w_max] are reported, each pair once.
    """
    if not 0 < w_min <= w_max:
        raise ValueError(f"need 0 < w_min <= w_max, got [{w_min}, {w_max}]")
    if steps < 2:
        raise ValueError(f"need steps >= 2, got {steps}")
    if parameter_id not in dataset.framework:
        raise UnknownOverrideTargetError(f"unknown parameter {parameter_id!r}")
    if profile is None:
        profile = dataset.profile()

    terms = _affine_terms(dataset, parameter_id, profile, category)
    span = w_max - w_min
    grid = tuple(w_min + span * i / (steps - 1) for i in range(steps))
    rankings = tuple(_ranking_at(terms, w) for w in grid)

    crossovers = []
    subjects = sorted(terms)
    for i, a in enumerate(subjects):
        base_a, slope_a, *_ = terms[a]
        for b in subjects[i + 1 :]:
            base_b, slope_b, *_ = terms[b]
            if slope_a == slope_b:
                continue  # parallel: dominance or permanent tie, no crossover
            w_star = (base_b - base_a) / (slope_a - slope_b)
            if w_min <= w_star <= w_max:
                crossovers.append(Crossover(weight=w_star, subjects=(a, b)))
    crossovers.sort(key=lambda c: (c.weight, c.subjects))
    return SweepResult(
        parameter=parameter_id,
        grid=grid,
        rankings=rankings,
        crossovers=tuple(crossovers),
    )


# ---------------------------------------------------------------------------
# Contributions and stability


@dataclass(frozen=True)
class Contribution:
    parameter: str
    weighted_score: float
    share: float


@dataclass(frozen=True)
class ContributionBreakdown:
    subject: str
    contributions: tuple[Contribution, ...]
    zero_total: bool

    def to_json(self) -> dict:
        return {
            "subject": self.subject,
            "zero_total": self.zero_total,
            "contributions": [
                {"parameter": c.parameter, "weighted_score": c.weighted_score, "share": c.share}
                for c in self.contributions
            ],
        }


def contribution(
    dataset: Dataset,
    subject_id: str,
    profile: Optional[WeightProfile] = None,
    category: CategoryFilter = "all",
) -> ContributionBreakdown:
    """Per-parameter weighted scores and their shares of the unbounded score.

    Shares sum to 1 when the score is positive; a zero score yields all-zero
    shares with the zero_total flag set.
    """
    if profile is None:
        profile = dataset.profile()
    card = score_subject(dataset, subject_id, profile, category)
    zero = card.ls <= 0
    contributions = tuple(
        Contribution(
            parameter=p.parameter,
            weighted_score=card.weights[p.parameter] * p.unit_score,
            share=0.0 if zero else card.weights[p.parameter] * p.unit_score / card.ls,
        )
        for p in card.parameters
    )
    return ContributionBreakdown(subject=subject_id, contributions=contributions, zero_total=zero)


@dataclass(frozen=True)
class StabilityInterval:
    """Maximal weight interval around the current weight that keeps the
    current top subject on top. Open ends are None (no crossover that way)."""

    parameter: str
    top_subject: str
    current_weight: float
    lower: Optional[float]
    upper: Optional[float]

    def to_json(self) -> dict:
        return {
            "parameter": self.parameter,
            "top_subject": self.top_subject,
            "current_weight": self.current_weight,
            "lower": self.lower,
            "upper": self.upper,
        }


def rank_stability(
    dataset: Dataset,
    parameter_id: str,
    profile: Optional[WeightProfile] = None,
    category: CategoryFilter = "all",
) -> StabilityInterval:
    """Interval of the swept weight (within [0, inf)) preserving the top rank.

    Bounds come from the closed-form crossovers between the current leader
    and every other subject; a missing bound means the leader dominates in
    that direction.
    """
    if parameter_id not in dataset.framework:
        raise UnknownOverrideTargetError(f"unknown parameter {parameter_id!r}")
    if profile is None:
        profile = dataset.profile()
    current = profile.weight(parameter_id)
    terms = _affine_terms(dataset, parameter_id, profile, category)
    top = _ranking_at(terms, current)[0]

    lower: Optional[float] = None
    upper: Optional[float] = None
    base_t, slope_t, *_ = terms[top]
    for other, (base_o, slope_o, *_rest) in terms.items():
        if other == top or slope_t == slope_o:
            continue
        w_star = (base_o - base_t) / (slope_t - slope_o)
        if w_star > current:
            upper = w_star if upper is None else min(upper, w_star)
        elif 0 <= w_star < current:
            lower = w_star if lower is None else max(lower, w_star)
    return StabilityInterval(
        parameter=parameter_id,
        top_subject=top,
        current_weight=current,
        lower=lower,
        upper=upper,
    )
