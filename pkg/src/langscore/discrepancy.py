"""Differences between published score tables and recomputation.

The engine always recomputes from rating cells; published figures exist only
as comparison targets. This module lists every cell and total whose
published value differs from recomputation by more than the threshold
(0.005, half a unit in the last published decimal place), so the data's
internal inconsistencies are user-visible instead of silently absorbed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .dataset import Dataset
from .published import PublishedTables
from .scoring import parameter_score, rank
from .sensitivity import WhatIfRequest, what_if

THRESHOLD = 0.005


@dataclass(frozen=True)
class DiscrepancyEntry:
    """One published value that recomputation does not reproduce."""

    source: str      # which published table the value came from
    subject: str
    measure: str     # parameter id, or "ls" / "ls_bounded"
    published: float
    recomputed: float
    note: str = ""

    @property
    def delta(self) -> float:
        return self.published - self.recomputed

    @property
    def location(self) -> str:
        return f"{self.source}:{self.subject}:{self.measure}"


@dataclass(frozen=True)
class DiscrepancyReport:
    entries: tuple[DiscrepancyEntry, ...]
    threshold: float = THRESHOLD

    def __len__(self) -> int:
        return len(self.entries)

    def find(self, subject: str, measure: str) -> Optional[DiscrepancyEntry]:
        for entry in self.entries:
            if entry.subject == subject and entry.measure == measure:
                return entry
        return None

    def to_json(self) -> dict:
        return {
            "threshold": self.threshold,
            "entries": [
                {
                    "location": e.location,
                    "source": e.source,
                    "subject": e.subject,
                    "measure": e.measure,
                    "published": e.published,
                    "recomputed": e.recomputed,
                    "delta": e.delta,
                    "note": e.note,
                }
                for e in self.entries
            ],
        }


def discrepancy_report(
    dataset: Dataset,
    published: PublishedTables,
    threshold: float = THRESHOLD,
) -> DiscrepancyReport:
    """Compare recomputation against every published figure.

    Covers per-parameter cells with status "published" (reconstructed and
    inferred cells have no published basis to disagree with), the overall
    totals, and the reweighted experiment's totals, including its divisor
    ambiguity: the published bounded column divides by the full-profile
    weight sum even though only one category of parameters is summed, while
    the engine always divides by the weights actually in scope.
    """
    entries: list[DiscrepancyEntry] = []

    for cell in published.parameter_cells:
        if cell.status != "published":
            continue
        recomputed = parameter_score(dataset, cell.subject, cell.parameter).unit_score
        if abs(cell.value - recomputed) > threshold:
            entries.append(
                DiscrepancyEntry(
                    source=cell.source or "parameter-scores",
                    subject=cell.subject,
                    measure=cell.parameter,
                    published=cell.value,
                    recomputed=recomputed,
                    note="recomputed from rating cells",
                )
            )

    if published.overall:
        profile = dataset.profile()
        cards = {c.subject: c for c in rank(dataset, profile)}
        for row in published.overall:
            card = cards[row.subject]
            for measure, pub, rec in (
                ("ls", row.ls, card.ls),
                ("ls_bounded", row.ls_bounded, card.ls_bounded),
            ):
                if abs(pub - rec) > threshold:
                    entries.append(
                        DiscrepancyEntry(
                            source="overall-scores",
                            subject=row.subject,
                            measure=measure,
                            published=pub,
                            recomputed=rec,
                            note="published total follows the published per-parameter values, "
                            "not cell-level recomputation",
                        )
                    )

    if published.reweighted is not None:
        table = published.reweighted
        result = what_if(
            dataset,
            WhatIfRequest(profile="default", weights=table.weights, category=table.category),
        )
        scoped_divisor = sum(result.profile.weight(p.id) for p in _in_scope(dataset, table.category))
        for row in table.rows:
            card = result.card(row.subject)
            if abs(row.ls - card.ls) > threshold:
                entries.append(
                    DiscrepancyEntry(
                        source="reweighted-scores",
                        subject=row.subject,
                        measure="ls",
                        published=row.ls,
                        recomputed=card.ls,
                        note="reweighted total recomputed from rating cells",
                    )
                )
            if abs(row.ls_bounded - card.ls_bounded) > threshold:
                entries.append(
                    DiscrepancyEntry(
                        source="reweighted-scores",
                        subject=row.subject,
                        measure="ls_bounded",
                        published=row.ls_bounded,
                        recomputed=card.ls_bounded,
                        note=(
                            f"divisor ambiguity: published column divides by the full-profile "
                            f"weight sum {table.published_divisor:g}, the engine divides by the "
                            f"in-scope weight sum {scoped_divisor:g}"
                        ),
                    )
                )

    return DiscrepancyReport(entries=tuple(entries), threshold=threshold)


def _in_scope(dataset: Dataset, category: str):
    if category == "technical-only":
        return dataset.framework.technical
    if category == "environmental-only":
        return dataset.framework.environmental
    return dataset.framework.parameters
