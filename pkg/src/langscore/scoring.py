"""Suitability scoring: parameter scores, score cards, rankings.

There is exactly one computation path. Parameter unit scores are always
recomputed from rating cells (mean of mapped levels, max-normalized demand
means, or a stored direct override); the weighted sum of unit scores gives
the unbounded score, and dividing by the sum of the weights in scope gives
the bounded score in [0, 1]. Any published figures that disagree with this
recomputation are surfaced through the discrepancy report, never silently
substituted.

All functions are pure over immutable inputs and safe for concurrent use.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Optional

from .dataset import Dataset
from .demand import SUB_FEATURES, normalize_demand
from .errors import MissingCellError, UnknownSubjectError
from .framework import Parameter, WeightProfile
from .levels import Level, map_level

CategoryFilter = Literal["all", "technical-only", "environmental-only"]

CATEGORY_FILTERS = ("all", "technical-only", "environmental-only")


def _in_scope(parameter: Parameter, category: CategoryFilter) -> bool:
    if category == "all":
        return True
    if category == "technical-only":
        return parameter.category == "technical"
    if category == "environmental-only":
        return parameter.category == "environmental"
    raise ValueError(f"unknown category filter {category!r}")


@dataclass(frozen=True)
class ParameterScore:
    """Unit score of one parameter for one subject, with its ingredients."""

    parameter: str
    unit_score: float
    sub_scores: Optional[dict[str, float]]
    provenance: tuple[str, ...]

    def __post_init__(self) -> None:
        if not -1e-12 <= self.unit_score <= 1 + 1e-12:
            raise ValueError(
                f"unit score for {self.parameter!r} out of [0,1]: {self.unit_score}"
            )


@dataclass(frozen=True)
class ScoreCard:
    """All scores for one subject under one weight profile and category filter.

    `ls` is the weighted sum of unit scores over the parameters in scope;
    `ls_bounded` divides it by the sum of the weights in scope. The
    technical/environmental pair partitions `ls`; their bounded variants
    divide by the matching weight subtotal (0 when a category is empty).
    """

    subject: str
    profile: str
    category: CategoryFilter
    parameters: tuple[ParameterScore, ...]
    weights: dict[str, float]
    ls: float
    ls_bounded: float
    ls_tech: float
    ls_env: float
    ls_tech_bounded: float
    ls_env_bounded: float

    def parameter_score(self, parameter_id: str) -> ParameterScore:
        for score in self.parameters:
            if score.parameter == parameter_id:
                return score
        raise KeyError(parameter_id)

    def to_json(self) -> dict:
        return {
            "subject": self.subject,
            "profile": self.profile,
            "category": self.category,
            "ls": self.ls,
            "ls_bounded": self.ls_bounded,
            "ls_tech": self.ls_tech,
            "ls_env": self.ls_env,
            "ls_tech_bounded": self.ls_tech_bounded,
            "ls_env_bounded": self.ls_env_bounded,
            "parameters": [
                {
                    "parameter": p.parameter,
                    "unit_score": p.unit_score,
                    "weight": self.weights[p.parameter],
                    "weighted_score": self.weights[p.parameter] * p.unit_score,
                    "sub_scores": p.sub_scores,
                    "provenance": list(p.provenance),
                }
                for p in self.parameters
            ],
        }


def parameter_score(dataset: Dataset, subject_id: str, parameter_id: str) -> ParameterScore:
    """Unit score for one (subject, parameter) pair.

    Aggregate qualitative parameters take the arithmetic mean of the mapped
    sub-scores (each sub-parameter tops out at 1, so the mean is the sum
    divided by the maximum possible score). Quantitative parameters delegate
    to the demand snapshot. Direct-override parameters return the stored
    unit score unchanged.
    """
    parameter = dataset.framework.parameter(parameter_id)
    scale = dataset.framework.scale

    if parameter.score_mode == "direct-override":
        rating = dataset.cell(subject_id, parameter_id, None)
        if rating is None or rating.is_level:
            raise MissingCellError(subject_id, parameter_id)
        return ParameterScore(
            parameter=parameter_id,
            unit_score=rating.value,
            sub_scores=None,
            provenance=(rating.provenance,),
        )

    if parameter.kind == "quantitative-raw":
        if dataset.demand is None:
            raise MissingCellError(subject_id, parameter_id)
        return demand_parameter_score(dataset.demand, subject_id, parameter_id)

    sub_scores: dict[str, float] = {}
    provenance: list[str] = []
    for sub in parameter.sub_parameters:
        rating = dataset.cell(subject_id, parameter_id, sub.id)
        if rating is None or not rating.is_level:
            raise MissingCellError(subject_id, parameter_id, sub.id)
        sub_scores[sub.id] = map_level(rating.value, scale)
        provenance.append(rating.provenance)
    unit = sum(sub_scores.values()) / len(sub_scores)
    return ParameterScore(
        parameter=parameter_id,
        unit_score=unit,
        sub_scores=sub_scores,
        provenance=tuple(sorted(set(provenance))),
    )


def demand_parameter_score(snapshot, subject_id: str, parameter_id: str = "industry-demand") -> ParameterScore:
    """Demand unit score: mean of the three max-normalized sub-features."""
    normalized = normalize_demand(snapshot)
    if subject_id not in normalized:
        raise UnknownSubjectError(f"subject {subject_id!r} missing from demand snapshot")
    ratios = normalized[subject_id]
    return ParameterScore(
        parameter=parameter_id,
        unit_score=ratios["score"],
        sub_scores={s: ratios[s] for s in SUB_FEATURES},
        provenance=("snapshot",),
    )


def score_subject(
    dataset: Dataset,
    subject_id: str,
    profile: WeightProfile,
    category: CategoryFilter = "all",
) -> ScoreCard:
    """Full score card for one subject.

    The unbounded score is affine in each weight; scaling every weight by a
    positive constant scales it by that constant and leaves the bounded
    score untouched.
    """
    if subject_id not in dataset.subject_ids:
        raise UnknownSubjectError(f"unknown subject {subject_id!r}")
    in_scope = [p for p in dataset.framework.parameters if _in_scope(p, category)]
    scores = tuple(parameter_score(dataset, subject_id, p.id) for p in in_scope)
    weights = {p.id: profile.weight(p.id) for p in in_scope}

    ls_tech = sum(
        (weights[p.id] * s.unit_score
         for p, s in zip(in_scope, scores)
         if p.category == "technical"),
        0.0,
    )
    ls_env = sum(
        (weights[p.id] * s.unit_score
         for p, s in zip(in_scope, scores)
         if p.category == "environmental"),
        0.0,
    )
    ls = sum((weights[p.id] * s.unit_score for p, s in zip(in_scope, scores)), 0.0)
    total_w = sum(weights.values())
    tech_w = sum((weights[p.id] for p in in_scope if p.category == "technical"), 0.0)
    env_w = sum((weights[p.id] for p in in_scope if p.category == "environmental"), 0.0)

    return ScoreCard(
        subject=subject_id,
        profile=profile.name,
        category=category,
        parameters=scores,
        weights=weights,
        ls=ls,
        ls_bounded=ls / total_w if total_w > 0 else 0.0,
        ls_tech=ls_tech,
        ls_env=ls_env,
        ls_tech_bounded=ls_tech / tech_w if tech_w > 0 else 0.0,
        ls_env_bounded=ls_env / env_w if env_w > 0 else 0.0,
    )


def rank(
    dataset: Dataset,
    profile: WeightProfile,
    category: CategoryFilter = "all",
) -> list[ScoreCard]:
    """Score cards for every subject, best first.

    Order: bounded score descending, then bounded technical score
    descending, then subject id ascending. Deterministic for fixed inputs.
    """
    cards = [score_subject(dataset, s.id, profile, category) for s in dataset.subjects]
    cards.sort(key=lambda c: (-c.ls_bounded, -c.ls_tech_bounded, c.subject))
    return cards
