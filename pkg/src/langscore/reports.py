"""Report construction and rendering.

Reports are built as column/row tables from engine results and rendered to
plain text, CSV (RFC 4180 quoting, CRLF records), GitHub-style markdown, or
JSON. Human formats round numbers to a fixed number of decimals, half-up;
JSON always carries full precision. Every number in a rendered report equals
the engine's value after display rounding and nothing else.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from decimal import Decimal, ROUND_HALF_UP
from typing import Literal, Optional, Sequence

from .dataset import Dataset
from .discrepancy import discrepancy_report
from .errors import LangscoreError
from .levels import Level
from .published import PublishedTables
from .scoring import CategoryFilter, ScoreCard, rank
from .sensitivity import SweepResult, WhatIfRequest, what_if
from .transition import pair_cost, subject_rating, total_cost

ReportKind = Literal[
    "parameter-table",
    "overall-table",
    "demand-table",
    "transition-table",
    "whatif-table",
    "discrepancy-report",
]
ReportFormat = Literal["table", "csv", "json", "md"]

REPORT_KINDS = (
    "parameter-table",
    "overall-table",
    "demand-table",
    "transition-table",
    "whatif-table",
    "discrepancy-report",
)
REPORT_FORMATS = ("table", "csv", "json", "md")


def round_half_up(value: float, decimals: int = 2) -> float:
    """Decimal display rounding; Python's bankers rounding is not wanted here."""
    quantum = Decimal(1).scaleb(-decimals)
    return float(Decimal(str(value)).quantize(quantum, rounding=ROUND_HALF_UP))


@dataclass(frozen=True)
class ReportSpec:
    kind: ReportKind
    format: ReportFormat = "table"
    decimals: int = 2

    def __post_init__(self) -> None:
        if self.kind not in REPORT_KINDS:
            raise ValueError(f"unknown report kind {self.kind!r}")
        if self.format not in REPORT_FORMATS:
            raise ValueError(f"unknown report format {self.format!r}")
        if self.decimals < 0:
            raise ValueError("decimals must be >= 0")


@dataclass(frozen=True)
class Table:
    """Rendering-ready report: columns, rows, and a lossless JSON payload."""

    columns: tuple[str, ...]
    rows: tuple[tuple, ...]
    payload: dict = field(default_factory=dict)


def _scorecard_rows(framework_parameters, cards: Sequence[ScoreCard]) -> Table:
    columns = ("subject",) + tuple(p.id for p in framework_parameters) + ("ls", "ls_bounded")
    rows = []
    for card in cards:
        by_id = {p.parameter: p.unit_score for p in card.parameters}
        rows.append(
            (card.subject,)
            + tuple(by_id.get(p.id) for p in framework_parameters)
            + (card.ls, card.ls_bounded)
        )
    payload = {"scorecards": [c.to_json() for c in cards]}
    return Table(columns=columns, rows=tuple(rows), payload=payload)


def build_parameter_table(dataset: Dataset, cards: Sequence[ScoreCard]) -> Table:
    return _scorecard_rows(dataset.framework.parameters, cards)


def build_overall_table(cards: Sequence[ScoreCard]) -> Table:
    columns = ("subject", "ls", "ls_bounded", "ls_tech", "ls_tech_bounded", "ls_env", "ls_env_bounded")
    rows = tuple(
        (c.subject, c.ls, c.ls_bounded, c.ls_tech, c.ls_tech_bounded, c.ls_env, c.ls_env_bounded)
        for c in cards
    )
    return Table(columns=columns, rows=rows, payload={"scorecards": [c.to_json() for c in cards]})


def build_demand_table(dataset: Dataset, cards: Sequence[ScoreCard]) -> Table:
    from .demand import SUB_FEATURES, normalize_demand

    if dataset.demand is None:
        raise LangscoreError("dataset has no demand snapshot")
    normalized = normalize_demand(dataset.demand)
    columns = ("subject",) + SUB_FEATURES + ("demand_score",)
    order = [c.subject for c in cards if c.subject in normalized]
    rows = tuple(
        (s,) + tuple(normalized[s][f] for f in SUB_FEATURES) + (normalized[s]["score"],)
        for s in order
    )
    payload = {
        "as_of": dataset.demand.as_of,
        "sources": list(dataset.demand.sources),
        "normalized": {s: normalized[s] for s in order},
    }
    return Table(columns=columns, rows=rows, payload=payload)


def build_transition_table(dataset: Dataset) -> Table:
    matrix = dataset.transition_costs
    if matrix is None:
        raise LangscoreError("dataset has no transition-cost matrix")
    subjects = [s.id for s in dataset.subjects if s.id in matrix.subjects]
    columns = ("from",) + tuple(subjects) + ("total_cost", "rating")
    rows = []
    payload_rows = []
    for source in subjects:
        vectors = {
            target: pair_cost(source, target, matrix).components for target in subjects
        }
        total = total_cost(source, matrix)
        rating = subject_rating(source, matrix)
        rows.append(
            (source,)
            + tuple("/".join(str(c) for c in vectors[t]) if t != source else "-" for t in subjects)
            + (total, rating.token)
        )
        payload_rows.append(
            {
                "from": source,
                "costs": {t: list(vectors[t]) for t in subjects if t != source},
                "total_cost": total,
                "rating": rating.token,
            }
        )
    thresholds = {"fully": 2 * matrix.n, "mostly": 2.5 * matrix.n, "partially": 3 * matrix.n}
    return Table(
        columns=columns,
        rows=tuple(rows),
        payload={"subjects": subjects, "rows": payload_rows, "thresholds": thresholds},
    )


def build_whatif_table(dataset: Dataset, request: WhatIfRequest) -> Table:
    result = what_if(dataset, request)
    table = build_overall_table(result.scorecards)
    payload = dict(table.payload)
    payload["category"] = result.category
    payload["weights"] = {p.id: result.profile.weight(p.id) for p in dataset.framework.parameters}
    return Table(columns=table.columns, rows=table.rows, payload=payload)


def build_discrepancy_table(dataset: Dataset, published: PublishedTables) -> Table:
    report = discrepancy_report(dataset, published)
    columns = ("location", "published", "recomputed", "delta", "note")
    rows = tuple(
        (e.location, e.published, e.recomputed, e.delta, e.note) for e in report.entries
    )
    return Table(columns=columns, rows=rows, payload=report.to_json())


def build_report(
    spec: ReportSpec,
    dataset: Dataset,
    published: Optional[PublishedTables] = None,
    request: Optional[WhatIfRequest] = None,
    profile_name: str = "default",
    category: CategoryFilter = "all",
) -> Table:
    if spec.kind == "whatif-table":
        return build_whatif_table(dataset, request or WhatIfRequest(profile=profile_name, category=category))
    if spec.kind == "discrepancy-report":
        if published is None:
            raise LangscoreError("discrepancy report needs published tables")
        return build_discrepancy_table(dataset, published)
    cards = rank(dataset, dataset.profile(profile_name), category)
    if spec.kind == "parameter-table":
        return build_parameter_table(dataset, cards)
    if spec.kind == "overall-table":
        return build_overall_table(cards)
    if spec.kind == "demand-table":
        return build_demand_table(dataset, cards)
    if spec.kind == "transition-table":
        return build_transition_table(dataset)
    raise ValueError(f"unknown report kind {spec.kind!r}")


# ---------------------------------------------------------------------------
# Rendering


def _display(cell, decimals: int) -> str:
    if cell is None:
        return ""
    if isinstance(cell, bool):
        return str(cell)
    if isinstance(cell, Level):
        return cell.token
    if isinstance(cell, float):
        return f"{round_half_up(cell, decimals):.{decimals}f}"
    return str(cell)


def render_plain(table: Table, decimals: int = 2) -> str:
    cells = [list(table.columns)] + [
        [_display(c, decimals) for c in row] for row in table.rows
    ]
    widths = [max(len(row[i]) for row in cells) for i in range(len(table.columns))]
    lines = []
    for r, row in enumerate(cells):
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
        if r == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def render_csv(table: Table, decimals: int = 2) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, quoting=csv.QUOTE_MINIMAL, lineterminator="\r\n")
    writer.writerow(table.columns)
    for row in table.rows:
        writer.writerow([_display(c, decimals) for c in row])
    return buffer.getvalue()


def render_markdown(table: Table, decimals: int = 2) -> str:
    def escape(text: str) -> str:
        return text.replace("|", "\\|")

    lines = ["| " + " | ".join(escape(c) for c in table.columns) + " |"]
    lines.append("| " + " | ".join("---" for _ in table.columns) + " |")
    for row in table.rows:
        lines.append("| " + " | ".join(escape(_display(c, decimals)) for c in row) + " |")
    return "\n".join(lines) + "\n"


def render_json(table: Table) -> str:
    return json.dumps(table.payload, indent=2, ensure_ascii=False) + "\n"


def render_report(spec: ReportSpec, table: Table) -> str:
    """Render a built table in the requested format.

    JSON is lossless (full precision payload); the other formats round for
    display only.
    """
    if spec.format == "json":
        return render_json(table)
    if spec.format == "csv":
        return render_csv(table, spec.decimals)
    if spec.format == "md":
        return render_markdown(table, spec.decimals)
    return render_plain(table, spec.decimals)
