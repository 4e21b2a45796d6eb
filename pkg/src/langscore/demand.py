"""Industry-demand snapshots and their max-normalization.

A snapshot is a dated set of raw statistics per subject: web-search share
(percent), active repository count, and job-post count. Scores are produced
by dividing each value by the maximum over subjects for its sub-feature and
averaging the three ratios, which makes a percentage and two raw counts
commensurable. Snapshots are versioned files; there is no live fetching.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .errors import DegenerateSnapshotError, ParseError, UnknownSubjectError

# Sub-feature ids in aggregation (and serialization) order.
SUB_FEATURES = ("web-search-share", "active-repositories", "job-posts")
_FIELDS = ("web_search_share", "active_repositories", "job_posts")


@dataclass(frozen=True)
class DemandEntry:
    """Raw demand statistics for one subject."""

    subject: str
    web_search_share: float
    active_repositories: float
    job_posts: float

    def __post_init__(self) -> None:
        for name in _FIELDS:
            value = getattr(self, name)
            if value < 0:
                raise ValueError(
                    f"demand value {name} for {self.subject!r} must be >= 0, got {value}"
                )

    def value(self, sub_feature: str) -> float:
        return getattr(self, _FIELDS[SUB_FEATURES.index(sub_feature)])


@dataclass(frozen=True)
class DemandSnapshot:
    """A dated demand snapshot covering each subject exactly once."""

    as_of: str
    entries: tuple[DemandEntry, ...]
    sources: tuple[str, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        ids = [e.subject for e in self.entries]
        if len(set(ids)) != len(ids):
            dupes = sorted({i for i in ids if ids.count(i) > 1})
            raise ValueError(f"subjects appear more than once in snapshot: {dupes}")

    @property
    def subjects(self) -> tuple[str, ...]:
        return tuple(e.subject for e in self.entries)

    def entry(self, subject: str) -> DemandEntry:
        for e in self.entries:
            if e.subject == subject:
                return e
        raise UnknownSubjectError(f"subject {subject!r} missing from demand snapshot")

    def with_value(self, subject: str, sub_feature: str, value: float) -> "DemandSnapshot":
        """Copy of the snapshot with one raw value replaced."""
        if sub_feature not in SUB_FEATURES:
            raise KeyError(sub_feature)
        self.entry(subject)  # raise early on unknown subject
        fields = dict(zip(SUB_FEATURES, _FIELDS))
        entries = tuple(
            DemandEntry(
                subject=e.subject,
                **{
                    f: (value if e.subject == subject and fields[sub_feature] == f else getattr(e, f))
                    for f in _FIELDS
                },
            )
            for e in self.entries
        )
        return DemandSnapshot(as_of=self.as_of, entries=entries, sources=self.sources)

    def to_json(self) -> dict:
        return {
            "as_of": self.as_of,
            "entries": [
                {
                    "subject": e.subject,
                    "web_search_share": e.web_search_share,
                    "active_repositories": e.active_repositories,
                    "job_posts": e.job_posts,
                }
                for e in self.entries
            ],
            "sources": list(self.sources),
        }

    @classmethod
    def from_json(cls, data: dict, location: str = "demand") -> "DemandSnapshot":
        allowed = {"as_of", "entries", "sources"}
        unknown = set(data) - allowed
        if unknown:
            raise ParseError(f"unknown fields {sorted(unknown)}", location)
        try:
            entries = []
            for i, raw in enumerate(data["entries"]):
                extra = set(raw) - {"subject", *_FIELDS}
                if extra:
                    raise ParseError(f"unknown fields {sorted(extra)}", f"{location}.entries[{i}]")
                entries.append(
                    DemandEntry(
                        subject=raw["subject"],
                        web_search_share=float(raw["web_search_share"]),
                        active_repositories=float(raw["active_repositories"]),
                        job_posts=float(raw["job_posts"]),
                    )
                )
            return cls(
                as_of=str(data["as_of"]),
                entries=tuple(entries),
                sources=tuple(data.get("sources", ())),
            )
        except KeyError as exc:
            raise ParseError(f"missing field {exc}", location) from None
        except ValueError as exc:
            raise ParseError(str(exc), location) from None


def load_snapshot(path: str | Path, expected_subjects: tuple[str, ...] | None = None) -> DemandSnapshot:
    """Read a standalone snapshot file and validate it.

    When `expected_subjects` is given, every one of them must be covered.
    """
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"{path}:{exc.lineno}:{exc.colno}") from None
    snapshot = DemandSnapshot.from_json(data, location=str(path))
    if expected_subjects is not None:
        missing = [s for s in expected_subjects if s not in snapshot.subjects]
        if missing:
            raise UnknownSubjectError(
                f"subjects missing from demand snapshot: {missing}"
            )
    return snapshot


def normalize_demand(snapshot: DemandSnapshot) -> dict[str, dict[str, float]]:
    """Per-subject normalized sub-feature ratios plus their mean.

    Returns {subject: {sub-feature: ratio..., "score": mean}}. Each ratio is
    value / max-over-subjects(value), so at least one subject hits 1.0 per
    sub-feature and every score lies in [0, 1].
    """
    if not snapshot.entries:
        raise DegenerateSnapshotError("snapshot has no entries")
    maxima = {}
    for sub_feature in SUB_FEATURES:
        top = max(e.value(sub_feature) for e in snapshot.entries)
        if top <= 0:
            raise DegenerateSnapshotError(
                f"sub-feature {sub_feature!r} is zero for every subject"
            )
        maxima[sub_feature] = top
    result: dict[str, dict[str, float]] = {}
    for entry in snapshot.entries:
        ratios = {
            sub_feature: entry.value(sub_feature) / maxima[sub_feature]
            for sub_feature in SUB_FEATURES
        }
        ratios["score"] = sum(ratios[s] for s in SUB_FEATURES) / len(SUB_FEATURES)
        result[entry.subject] = ratios
    return result
