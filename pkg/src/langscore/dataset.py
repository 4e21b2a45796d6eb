"""Dataset container, coherence validation, and the JSON file format.

A dataset bundles one framework with its subjects, rating cells, optional
demand snapshot, optional transition-cost matrix, and weight profiles.

Two failure channels, deliberately distinct:

* `load_dataset` / `loads_dataset` raise (`ParseError`,
  `UnresolvedReferenceError`, `DuplicateIdError`) when a document cannot be
  resolved into objects: malformed JSON, unknown fields, dangling ids,
  duplicate ids.
* `validate_dataset` never raises. It returns a report listing every
  coherence violation (missing or duplicated cells, kind mismatches, weight
  problems, snapshot and matrix coverage). An empty report guarantees every
  scoring operation will run without errors.

The file format is fixed: UTF-8 JSON with top-level fields `framework`,
`subjects`, `ratings`, `demand`, `transition_costs`, `weight_profiles`;
unknown fields anywhere are rejected. Qualitative values serialize as
"fully" | "mostly" | "partially" | "no" (looser spellings are canonicalized
on input). See data/SCHEMA.md for the full field reference.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Optional

from .demand import DemandSnapshot, SUB_FEATURES
from .errors import DuplicateIdError, ParseError, UnresolvedReferenceError
from .framework import (
    Framework,
    Parameter,
    PROVENANCE_VALUES,
    Rating,
    RatingValue,
    Subject,
    SubjectAttributes,
    SubParameter,
    WeightProfile,
)
from .levels import Level, RatingScale, parse_level
from .transition import TransitionCostMatrix

CellKey = tuple[str, str, Optional[str]]


@dataclass(frozen=True)
class Dataset:
    """Immutable bundle of a framework and everything rated against it."""

    framework: Framework
    subjects: tuple[Subject, ...]
    ratings: tuple[Rating, ...]
    demand: Optional[DemandSnapshot] = None
    transition_costs: Optional[TransitionCostMatrix] = None
    profiles: tuple[WeightProfile, ...] = ()
    name: str = "dataset"

    def __post_init__(self) -> None:
        ids = [s.id for s in self.subjects]
        if len(set(ids)) != len(ids):
            dupes = sorted({i for i in ids if ids.count(i) > 1})
            raise ValueError(f"duplicate subject ids: {dupes}")
        names = [p.name for p in self.profiles]
        if len(set(names)) != len(names):
            raise ValueError("duplicate weight profile names")
        cells: dict[CellKey, Rating] = {}
        duplicates: list[Rating] = []
        for rating in self.ratings:
            key = (rating.subject, rating.parameter, rating.sub_parameter)
            if key in cells:
                duplicates.append(rating)
            else:
                cells[key] = rating
        object.__setattr__(self, "_cells", cells)
        object.__setattr__(self, "_duplicates", tuple(duplicates))

    @property
    def subject_ids(self) -> tuple[str, ...]:
        return tuple(s.id for s in self.subjects)

    def subject(self, subject_id: str) -> Subject:
        for s in self.subjects:
            if s.id == subject_id:
                return s
        raise KeyError(subject_id)

    def cell(self, subject: str, parameter: str, sub_parameter: str | None) -> Rating | None:
        return self._cells.get((subject, parameter, sub_parameter))

    @property
    def duplicate_cells(self) -> tuple[Rating, ...]:
        return self._duplicates

    def profile(self, name: str = "default") -> WeightProfile:
        for p in self.profiles:
            if p.name == name:
                return p
        raise KeyError(f"unknown weight profile {name!r}")

    def with_cell_values(self, updates: dict[CellKey, RatingValue]) -> "Dataset":
        """Copy of the dataset with the given cells replaced (provenance "user").

        Keys must match existing cells; callers are expected to have resolved
        targets beforehand (the what-if layer does).
        """
        if not updates:
            return self
        missing = [k for k in updates if k not in self._cells]
        if missing:
            raise KeyError(f"no such cells: {missing}")
        ratings = []
        for r in self.ratings:
            key = (r.subject, r.parameter, r.sub_parameter)
            if key in updates:
                ratings.append(replace(r, value=updates[key], provenance="user"))
            else:
                ratings.append(r)
        return replace(self, ratings=tuple(ratings))

    def with_demand(self, snapshot: DemandSnapshot) -> "Dataset":
        return replace(self, demand=snapshot)

    def to_json(self) -> dict:
        return _dataset_to_json(self)

    def canonical_json(self) -> str:
        """Stable serialized form; equal strings mean structurally equal datasets."""
        return json.dumps(self.to_json(), sort_keys=True, ensure_ascii=False)


# ---------------------------------------------------------------------------
# Validation


@dataclass(frozen=True)
class Violation:
    kind: str
    location: str
    message: str

    def __str__(self) -> str:
        return f"[{self.kind}] {self.location}: {self.message}"


@dataclass(frozen=True)
class ValidationReport:
    """Violations block scoring; notes are informational only."""

    violations: tuple[Violation, ...] = ()
    notes: tuple[str, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def render(self) -> str:
        lines = [str(v) for v in self.violations]
        lines.extend(f"[note] {n}" for n in self.notes)
        return "\n".join(lines) if lines else "ok: no violations"


def validate_dataset(dataset: Dataset) -> ValidationReport:
    """Check that every scoring operation can run on this dataset.

    Empty report (no violations) if and only if: every (subject, qualitative
    sub-parameter) cell of every aggregate-mode parameter is present exactly
    once with a level value; every direct-override parameter has exactly one
    unit score per subject; value kinds match their targets; every profile
    assigns one strictly positive weight to every parameter; the demand
    snapshot covers every subject (when a quantitative parameter exists); and
    the transition matrix covers every ordered subject pair (when present).
    """
    violations: list[Violation] = []
    notes: list[str] = []
    fw = dataset.framework

    def flag(kind: str, location: str, message: str) -> None:
        violations.append(Violation(kind=kind, location=location, message=message))

    for rating in dataset.duplicate_cells:
        where = f"{rating.subject}/{rating.parameter}" + (
            f"/{rating.sub_parameter}" if rating.sub_parameter else ""
        )
        flag("duplicate-rating", where, "cell appears more than once")

    for subject in dataset.subjects:
        for parameter in fw.parameters:
            if parameter.score_mode == "direct-override":
                rating = dataset.cell(subject.id, parameter.id, None)
                where = f"{subject.id}/{parameter.id}"
                if rating is None:
                    flag("missing-rating", where, "direct-override parameter has no unit score")
                elif rating.is_level:
                    flag("kind-mismatch", where, "direct-override parameter needs a unit score, not a level")
                continue
            if parameter.kind == "quantitative-raw":
                # Raw values live in the demand snapshot, not the ratings list.
                continue
            for sub in parameter.sub_parameters:
                rating = dataset.cell(subject.id, parameter.id, sub.id)
                where = f"{subject.id}/{parameter.id}/{sub.id}"
                if rating is None:
                    flag("missing-rating", where, "no cell for this sub-parameter")
                elif not rating.is_level:
                    flag("kind-mismatch", where, "qualitative sub-parameter needs a level value")

    for rating in dataset.ratings:
        where = f"{rating.subject}/{rating.parameter}" + (
            f"/{rating.sub_parameter}" if rating.sub_parameter else ""
        )
        if rating.subject not in dataset.subject_ids:
            flag("unknown-reference", where, f"unknown subject id {rating.subject!r}")
            continue
        if rating.parameter not in fw:
            flag("unknown-reference", where, f"unknown parameter id {rating.parameter!r}")
            continue
        parameter = fw.parameter(rating.parameter)
        if rating.sub_parameter is not None:
            try:
                parameter.sub(rating.sub_parameter)
            except KeyError:
                flag("unknown-reference", where, f"unknown sub-parameter id {rating.sub_parameter!r}")
                continue
        if parameter.score_mode == "direct-override":
            if rating.sub_parameter is not None:
                flag("kind-mismatch", where, "direct-override parameter takes no sub-parameter cells")
        else:
            if rating.sub_parameter is None:
                flag("kind-mismatch", where, "aggregate parameter needs sub-parameter cells")
            elif parameter.kind == "quantitative-raw":
                flag("kind-mismatch", where, "raw quantitative values belong in the demand snapshot")

    quantitative = [p for p in fw.parameters if p.score_mode != "direct-override" and p.kind == "quantitative-raw"]
    if quantitative:
        if dataset.demand is None:
            flag(
                "missing-demand-snapshot",
                quantitative[0].id,
                "framework has a quantitative parameter but the dataset has no demand snapshot",
            )
        else:
            covered = set(dataset.demand.subjects)
            for subject in dataset.subjects:
                if subject.id not in covered:
                    flag("missing-demand-entry", subject.id, "subject missing from demand snapshot")
            for sub_feature in SUB_FEATURES:
                if all(e.value(sub_feature) == 0 for e in dataset.demand.entries):
                    flag("degenerate-demand", sub_feature, "sub-feature is zero for every subject")

    if not dataset.profiles:
        flag("missing-profile", "weight_profiles", "dataset declares no weight profile")
    for profile in dataset.profiles:
        for parameter in fw.parameters:
            if parameter.id not in profile.weights:
                flag("missing-weight", f"{profile.name}/{parameter.id}", "parameter has no weight")
            elif profile.weights[parameter.id] <= 0:
                flag(
                    "non-positive-weight",
                    f"{profile.name}/{parameter.id}",
                    f"weight must be > 0, got {profile.weights[parameter.id]}",
                )
        for parameter_id in profile.weights:
            if parameter_id not in fw:
                flag("unknown-weight-target", f"{profile.name}/{parameter_id}", "no such parameter")

    if dataset.transition_costs is not None:
        matrix = dataset.transition_costs
        for source in dataset.subject_ids:
            for target in dataset.subject_ids:
                if source != target and (source, target) not in matrix.costs:
                    flag("missing-transition-pair", f"{source}->{target}", "no cost vector for this pair")
        asymmetric = matrix.asymmetric_pairs()
        if asymmetric:
            notes.append(
                "transition matrix is asymmetric for pairs: "
                + ", ".join(f"{a}<->{b}" for a, b in asymmetric)
            )

    return ValidationReport(violations=tuple(violations), notes=tuple(notes))


# ---------------------------------------------------------------------------
# Serialization


def _reject_unknown(raw: dict, allowed: set[str], location: str) -> None:
    unknown = set(raw) - allowed
    if unknown:
        raise ParseError(f"unknown fields {sorted(unknown)}", location)


def _parse_framework(raw: dict, location: str = "framework") -> Framework:
    _reject_unknown(raw, {"scale", "parameters"}, location)
    try:
        scale = RatingScale.from_json(raw["scale"])
    except KeyError:
        raise ParseError("missing field 'scale'", location) from None
    except ValueError as exc:
        raise ParseError(str(exc), f"{location}.scale") from None
    parameters = []
    for i, p_raw in enumerate(raw.get("parameters", [])):
        where = f"{location}.parameters[{i}]"
        _reject_unknown(p_raw, {"id", "name", "category", "score_mode", "sub_parameters"}, where)
        subs = []
        for j, s_raw in enumerate(p_raw.get("sub_parameters", [])):
            sub_where = f"{where}.sub_parameters[{j}]"
            _reject_unknown(s_raw, {"id", "name", "kind"}, sub_where)
            try:
                subs.append(
                    SubParameter(
                        id=s_raw["id"],
                        name=s_raw.get("name", s_raw["id"]),
                        kind=s_raw.get("kind", "qualitative"),
                    )
                )
            except (KeyError, ValueError) as exc:
                raise ParseError(str(exc), sub_where) from None
        try:
            parameters.append(
                Parameter(
                    id=p_raw["id"],
                    name=p_raw.get("name", p_raw["id"]),
                    category=p_raw["category"],
                    sub_parameters=tuple(subs),
                    score_mode=p_raw.get("score_mode", "aggregate-sub-ratings"),
                )
            )
        except (KeyError, ValueError) as exc:
            raise ParseError(str(exc), where) from None
    try:
        return Framework(scale=scale, parameters=tuple(parameters))
    except ValueError as exc:
        raise ParseError(str(exc), location) from None


def _parse_subjects(raw: list, location: str = "subjects") -> tuple[Subject, ...]:
    subjects = []
    seen = set()
    for i, s_raw in enumerate(raw):
        where = f"{location}[{i}]"
        _reject_unknown(s_raw, {"id", "name", "attributes"}, where)
        attributes = None
        if s_raw.get("attributes") is not None:
            a_raw = s_raw["attributes"]
            _reject_unknown(a_raw, {"paradigm", "typing", "strength"}, f"{where}.attributes")
            try:
                attributes = SubjectAttributes(
                    paradigm=a_raw["paradigm"],
                    typing=a_raw["typing"],
                    strength=a_raw["strength"],
                )
            except (KeyError, ValueError) as exc:
                raise ParseError(str(exc), f"{where}.attributes") from None
        try:
            subject = Subject(id=s_raw["id"], name=s_raw.get("name", s_raw["id"]), attributes=attributes)
        except (KeyError, ValueError) as exc:
            raise ParseError(str(exc), where) from None
        if subject.id in seen:
            raise DuplicateIdError(f"duplicate subject id {subject.id!r}", where)
        seen.add(subject.id)
        subjects.append(subject)
    return tuple(subjects)


def _parse_rating(raw: dict, framework: Framework, subject_ids: set[str], location: str) -> Rating:
    _reject_unknown(raw, {"subject", "parameter", "sub_parameter", "value", "provenance"}, location)
    try:
        subject = raw["subject"]
        parameter_id = raw["parameter"]
        value = raw["value"]
        provenance = raw.get("provenance", "user")
    except KeyError as exc:
        raise ParseError(f"missing field {exc}", location) from None
    if subject not in subject_ids:
        raise UnresolvedReferenceError(f"unknown subject id {subject!r}", location)
    if parameter_id not in framework:
        raise UnresolvedReferenceError(f"unknown parameter id {parameter_id!r}", location)
    parameter = framework.parameter(parameter_id)
    sub_parameter = raw.get("sub_parameter")
    if sub_parameter is not None:
        try:
            parameter.sub(sub_parameter)
        except KeyError:
            raise UnresolvedReferenceError(
                f"unknown sub-parameter id {sub_parameter!r} in parameter {parameter_id!r}",
                location,
            ) from None
    if provenance not in PROVENANCE_VALUES:
        raise ParseError(f"unknown provenance {provenance!r}", location)
    parsed: RatingValue
    if isinstance(value, str):
        try:
            parsed = parse_level(value)
        except ValueError as exc:
            raise ParseError(str(exc), location) from None
    elif isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ParseError(f"rating value must be a level token or a number, got {value!r}", location)
    else:
        parsed = float(value)
    try:
        return Rating(
            subject=subject,
            parameter=parameter_id,
            sub_parameter=sub_parameter,
            value=parsed,
            provenance=provenance,
        )
    except ValueError as exc:
        raise ParseError(str(exc), location) from None


def _parse_profiles(raw: list, framework: Framework, location: str = "weight_profiles") -> tuple[WeightProfile, ...]:
    profiles = []
    seen = set()
    for i, p_raw in enumerate(raw):
        where = f"{location}[{i}]"
        _reject_unknown(p_raw, {"name", "weights"}, where)
        try:
            name = p_raw["name"]
            weights = p_raw["weights"]
        except KeyError as exc:
            raise ParseError(f"missing field {exc}", where) from None
        if name in seen:
            raise DuplicateIdError(f"duplicate weight profile {name!r}", where)
        seen.add(name)
        for parameter_id in weights:
            if parameter_id not in framework:
                raise UnresolvedReferenceError(
                    f"unknown parameter id {parameter_id!r} in profile {name!r}", where
                )
        profiles.append(WeightProfile(name=name, weights={k: float(v) for k, v in weights.items()}))
    return tuple(profiles)


def loads_dataset(text: str, name: str = "dataset", location: str = "<string>") -> Dataset:
    """Parse a dataset document from a JSON string."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, f"{location}:{exc.lineno}:{exc.colno}") from None
    if not isinstance(data, dict):
        raise ParseError("dataset document must be a JSON object", location)
    allowed = {"framework", "subjects", "ratings", "demand", "transition_costs", "weight_profiles"}
    _reject_unknown(data, allowed, location)
    for required in ("framework", "subjects", "ratings", "weight_profiles"):
        if required not in data:
            raise ParseError(f"missing top-level field {required!r}", location)

    framework = _parse_framework(data["framework"])
    subjects = _parse_subjects(data["subjects"])
    subject_ids = {s.id for s in subjects}

    ratings = tuple(
        _parse_rating(raw, framework, subject_ids, f"ratings[{i}]")
        for i, raw in enumerate(data["ratings"])
    )

    demand = None
    if data.get("demand") is not None:
        demand = DemandSnapshot.from_json(data["demand"])
        for entry in demand.entries:
            if entry.subject not in subject_ids:
                raise UnresolvedReferenceError(
                    f"unknown subject id {entry.subject!r}", "demand.entries"
                )

    matrix = None
    if data.get("transition_costs") is not None:
        matrix = TransitionCostMatrix.from_json(data["transition_costs"])
        for source, target in matrix.costs:
            for subject in (source, target):
                if subject not in subject_ids:
                    raise UnresolvedReferenceError(
                        f"unknown subject id {subject!r}", "transition_costs"
                    )

    profiles = _parse_profiles(data["weight_profiles"], framework)
    return Dataset(
        framework=framework,
        subjects=subjects,
        ratings=ratings,
        demand=demand,
        transition_costs=matrix,
        profiles=profiles,
        name=name,
    )


def load_dataset(path: str | Path) -> Dataset:
    """Read and parse a dataset file."""
    path = Path(path)
    return loads_dataset(path.read_text(encoding="utf-8"), name=path.stem, location=str(path))


def _dataset_to_json(dataset: Dataset) -> dict:
    ratings = []
    for r in dataset.ratings:
        cell: dict = {"subject": r.subject, "parameter": r.parameter}
        if r.sub_parameter is not None:
            cell["sub_parameter"] = r.sub_parameter
        cell["value"] = r.value.token if isinstance(r.value, Level) else r.value
        cell["provenance"] = r.provenance
        ratings.append(cell)
    return {
        "framework": {
            "scale": dataset.framework.scale.to_json(),
            "parameters": [
                {
                    "id": p.id,
                    "name": p.name,
                    "category": p.category,
                    "score_mode": p.score_mode,
                    "sub_parameters": [
                        {"id": s.id, "name": s.name, "kind": s.kind} for s in p.sub_parameters
                    ],
                }
                for p in dataset.framework.parameters
            ],
        },
        "subjects": [
            {
                "id": s.id,
                "name": s.name,
                "attributes": (
                    {
                        "paradigm": s.attributes.paradigm,
                        "typing": s.attributes.typing,
                        "strength": s.attributes.strength,
                    }
                    if s.attributes is not None
                    else None
                ),
            }
            for s in dataset.subjects
        ],
        "ratings": ratings,
        "demand": dataset.demand.to_json() if dataset.demand is not None else None,
        "transition_costs": (
            dataset.transition_costs.to_json() if dataset.transition_costs is not None else None
        ),
        "weight_profiles": [
            {"name": p.name, "weights": dict(p.weights)} for p in dataset.profiles
        ],
    }


def dumps_dataset(dataset: Dataset) -> str:
    """Serialize to the canonical file form (round-trips through loads_dataset)."""
    return json.dumps(dataset.to_json(), indent=2, ensure_ascii=False) + "\n"


def save_dataset(dataset: Dataset, path: str | Path) -> None:
    Path(path).write_text(dumps_dataset(dataset), encoding="utf-8")
