"""Published score tables bundled alongside a dataset.

The source study published per-parameter unit scores and totals that do not
everywhere agree with recomputation from its own rating cells; some of its
columns are also truncated in the available text. This module models that
bundle: every cell carries a status.

* "published":     the value as printed in the source tables;
* "reconstructed": a value the source truncated away, rebuilt from its
                    stated rules (and marked as such);
* "inferred":      a value with no published basis at all, solved from the
                    published totals.

Published cells feed the discrepancy report (see `langscore.discrepancy`).
The full grid, statuses included, can also be materialized as a
direct-override dataset via `reconstruction_dataset`, which is how the
published totals are reproduced through the ordinary scoring engine.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .dataset import Dataset
from .errors import ParseError
from .framework import Parameter, Rating, WeightProfile
from .scoring import CategoryFilter

CELL_STATUSES = ("published", "reconstructed", "inferred")


@dataclass(frozen=True)
class PublishedCell:
    subject: str
    parameter: str
    value: float
    status: str
    source: str

    def __post_init__(self) -> None:
        if self.status not in CELL_STATUSES:
            raise ValueError(f"unknown cell status {self.status!r}")


@dataclass(frozen=True)
class PublishedTotal:
    subject: str
    ls: float
    ls_bounded: float


@dataclass(frozen=True)
class ReweightedTable:
    """Published totals for the higher-demand-weight experiment."""

    weights: dict[str, float]
    category: CategoryFilter
    published_divisor: float
    rows: tuple[PublishedTotal, ...]


@dataclass(frozen=True)
class PublishedTables:
    parameter_cells: tuple[PublishedCell, ...]
    overall: tuple[PublishedTotal, ...]
    reweighted: Optional[ReweightedTable] = None

    def cell(self, subject: str, parameter: str) -> PublishedCell:
        for c in self.parameter_cells:
            if c.subject == subject and c.parameter == parameter:
                return c
        raise KeyError((subject, parameter))

    def overall_row(self, subject: str) -> PublishedTotal:
        for row in self.overall:
            if row.subject == subject:
                return row
        raise KeyError(subject)


def loads_published(text: str, location: str = "<string>") -> PublishedTables:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"{location}:{exc.lineno}:{exc.colno}") from None
    allowed = {"description", "parameter_scores", "overall_scores", "reweighted_scores"}
    unknown = set(data) - allowed
    if unknown:
        raise ParseError(f"unknown fields {sorted(unknown)}", location)

    cells = []
    for i, raw in enumerate(data.get("parameter_scores", [])):
        where = f"{location}.parameter_scores[{i}]"
        extra = set(raw) - {"subject", "parameter", "value", "status", "source"}
        if extra:
            raise ParseError(f"unknown fields {sorted(extra)}", where)
        try:
            cells.append(
                PublishedCell(
                    subject=raw["subject"],
                    parameter=raw["parameter"],
                    value=float(raw["value"]),
                    status=raw["status"],
                    source=raw.get("source", ""),
                )
            )
        except (KeyError, ValueError) as exc:
            raise ParseError(str(exc), where) from None

    overall = tuple(
        PublishedTotal(subject=r["subject"], ls=float(r["ls"]), ls_bounded=float(r["ls_bounded"]))
        for r in data.get("overall_scores", [])
    )

    reweighted = None
    if data.get("reweighted_scores") is not None:
        raw = data["reweighted_scores"]
        extra = set(raw) - {"weights", "category", "published_divisor", "rows"}
        if extra:
            raise ParseError(f"unknown fields {sorted(extra)}", f"{location}.reweighted_scores")
        reweighted = ReweightedTable(
            weights={k: float(v) for k, v in raw["weights"].items()},
            category=raw["category"],
            published_divisor=float(raw["published_divisor"]),
            rows=tuple(
                PublishedTotal(
                    subject=r["subject"], ls=float(r["ls"]), ls_bounded=float(r["ls_bounded"])
                )
                for r in raw["rows"]
            ),
        )
    return PublishedTables(parameter_cells=tuple(cells), overall=overall, reweighted=reweighted)


def load_published(path: str | Path) -> PublishedTables:
    path = Path(path)
    return loads_published(path.read_text(encoding="utf-8"), location=str(path))


_STATUS_PROVENANCE = {"published": "paper", "reconstructed": "editorial", "inferred": "inferred"}


def reconstruction_dataset(dataset: Dataset, published: PublishedTables) -> Dataset:
    """Dataset whose every parameter is a direct override holding the
    published (or reconstructed/inferred) unit score.

    Scoring this dataset reproduces the source's totals exactly as its own
    per-parameter tables imply them, which is the right baseline for
    checking the published total and reweighted tables. The cell-level
    rating data stays in the original dataset; nothing is merged.
    """
    framework = dataset.framework
    parameters = tuple(
        Parameter(
            id=p.id,
            name=p.name,
            category=p.category,
            sub_parameters=p.sub_parameters,
            score_mode="direct-override",
        )
        for p in framework.parameters
    )
    ratings = []
    for subject in dataset.subjects:
        for parameter in parameters:
            cell = published.cell(subject.id, parameter.id)
            ratings.append(
                Rating(
                    subject=subject.id,
                    parameter=parameter.id,
                    sub_parameter=None,
                    value=cell.value,
                    provenance=_STATUS_PROVENANCE[cell.status],
                )
            )
    profiles = dataset.profiles or (
        WeightProfile(name="default", weights={p.id: 1.0 for p in parameters}),
    )
    return Dataset(
        framework=type(framework)(scale=framework.scale, parameters=parameters),
        subjects=dataset.subjects,
        ratings=tuple(ratings),
        demand=None,
        transition_costs=None,
        profiles=profiles,
        name=f"{dataset.name}-published-reconstruction",
    )
