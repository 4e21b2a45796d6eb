"""langscore: data-driven multi-criteria scoring for language evaluation.

Qualitative rating matrices are mapped onto unit scores, aggregated per
parameter, weighted, and combined into bounded and unbounded suitability
scores with technical/environmental splits. On top of the pure engine sit a
transition-cost model, industry-demand normalization, what-if evaluation
with weight sweeps and rank-stability intervals, report rendering, a CLI,
and a small read-only HTTP service for the interactive what-if UI.

The bundled `paper-2023-oop` dataset evaluates C++, Java, Python, and C#
against a nine-parameter framework; `load_bundled_published()` returns the
score tables as printed in the source study for discrepancy checking.
"""

from importlib import resources

from .dataset import (
    Dataset,
    ValidationReport,
    Violation,
    dumps_dataset,
    load_dataset,
    loads_dataset,
    save_dataset,
    validate_dataset,
)
from .demand import DemandEntry, DemandSnapshot, load_snapshot, normalize_demand
from .discrepancy import DiscrepancyEntry, DiscrepancyReport, discrepancy_report
from .errors import (
    DegenerateSnapshotError,
    DuplicateIdError,
    LangscoreError,
    MissingAttributesError,
    MissingCellError,
    ParseError,
    UnknownOverrideTargetError,
    UnknownSubjectError,
    UnresolvedReferenceError,
)
from .framework import (
    Framework,
    Parameter,
    Rating,
    Subject,
    SubjectAttributes,
    SubParameter,
    WeightProfile,
    default_profile,
)
from .levels import DEFAULT_SCALE, Level, RatingScale, list_levels, map_level, parse_level
from .published import PublishedTables, load_published, loads_published, reconstruction_dataset
from .scoring import ParameterScore, ScoreCard, demand_parameter_score, parameter_score, rank, score_subject
from .sensitivity import (
    Contribution,
    ContributionBreakdown,
    Crossover,
    RatingOverride,
    StabilityInterval,
    SweepResult,
    WhatIfRequest,
    WhatIfResult,
    contribution,
    rank_stability,
    weight_sweep,
    what_if,
)
from .transition import (
    CostVector,
    TransitionCostMatrix,
    cost_rating,
    derive_cost_vector,
    pair_cost,
    subject_rating,
    total_cost,
)

BUNDLED_DATASET = "paper-2023-oop"


def bundled_dataset_text(name: str = BUNDLED_DATASET) -> str:
    return resources.files("langscore.data").joinpath(f"{name}.json").read_text(encoding="utf-8")


def load_bundled_dataset(name: str = BUNDLED_DATASET) -> Dataset:
    """The dataset shipped with the package."""
    return loads_dataset(bundled_dataset_text(name), name=name, location=f"bundled:{name}")


def load_bundled_published(name: str = BUNDLED_DATASET) -> PublishedTables:
    """The published score tables shipped alongside the bundled dataset."""
    text = resources.files("langscore.data").joinpath(f"{name}.published.json").read_text(
        encoding="utf-8"
    )
    return loads_published(text, location=f"bundled:{name}.published")


__version__ = "0.1.0"

__all__ = [
    "BUNDLED_DATASET",
    "Contribution",
    "ContributionBreakdown",
    "CostVector",
    "Crossover",
    "DEFAULT_SCALE",
    "Dataset",
    "DegenerateSnapshotError",
    "DemandEntry",
    "DemandSnapshot",
    "DiscrepancyEntry",
    "DiscrepancyReport",
    "DuplicateIdError",
    "Framework",
    "LangscoreError",
    "Level",
    "MissingAttributesError",
    "MissingCellError",
    "Parameter",
    "ParameterScore",
    "ParseError",
    "PublishedTables",
    "Rating",
    "RatingOverride",
    "RatingScale",
    "ScoreCard",
    "StabilityInterval",
    "Subject",
    "SubjectAttributes",
    "SubParameter",
    "SweepResult",
    "TransitionCostMatrix",
    "UnknownOverrideTargetError",
    "UnknownSubjectError",
    "UnresolvedReferenceError",
    "ValidationReport",
    "Violation",
    "WeightProfile",
    "WhatIfRequest",
    "WhatIfResult",
    "contribution",
    "cost_rating",
    "default_profile",
    "demand_parameter_score",
    "derive_cost_vector",
    "discrepancy_report",
    "dumps_dataset",
    "list_levels",
    "load_bundled_dataset",
    "load_bundled_published",
    "load_dataset",
    "load_published",
    "load_snapshot",
    "loads_dataset",
    "loads_published",
    "map_level",
    "normalize_demand",
    "pair_cost",
    "parameter_score",
    "parse_level",
    "rank",
    "rank_stability",
    "reconstruction_dataset",
    "save_dataset",
    "score_subject",
    "subject_rating",
    "total_cost",
    "validate_dataset",
    "weight_sweep",
    "what_if",
]
