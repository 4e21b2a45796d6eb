"""Command-line front door.

Subcommands: validate, score, rank, transition, demand, whatif, sweep,
report, serve. Data commands take an optional dataset path and default to
the bundled one. Exit codes: 0 success, 1 validation failure (or any data
error), 2 usage error. Output is deterministic for fixed inputs: identical
argv and files produce byte-identical stdout.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional

from . import load_bundled_dataset, load_bundled_published
from .dataset import Dataset, load_dataset, validate_dataset
from .errors import LangscoreError
from .framework import WeightProfile
from .levels import parse_level
from .published import PublishedTables, load_published
from .reports import ReportSpec, build_report, render_report
from .scoring import CategoryFilter
from .sensitivity import RatingOverride, WhatIfRequest, weight_sweep
from .service import serve

CATEGORY_TOKENS = {"all": "all", "tech": "technical-only", "env": "environmental-only"}


def _load(dataset_arg: Optional[str]) -> Dataset:
    if dataset_arg is None:
        return load_bundled_dataset()
    return load_dataset(dataset_arg)


def _load_published_for(dataset_arg: Optional[str], published_arg: Optional[str]) -> PublishedTables:
    if published_arg is not None:
        return load_published(published_arg)
    if dataset_arg is None:
        return load_bundled_published()
    sibling = Path(dataset_arg).with_suffix("").with_suffix("")  # strip .json
    candidate = Path(str(sibling) + ".published.json")
    if candidate.exists():
        return load_published(candidate)
    raise LangscoreError(
        f"no published tables found next to {dataset_arg}; pass --published FILE"
    )


def _parse_weight_sets(pairs: list[str]) -> dict[str, float]:
    weights = {}
    for pair in pairs:
        if "=" not in pair:
            raise LangscoreError(f"--set expects PARAM=WEIGHT, got {pair!r}")
        key, _, raw = pair.partition("=")
        try:
            weights[key.strip()] = float(raw)
        except ValueError:
            raise LangscoreError(f"--set weight must be a number, got {raw!r}") from None
    return weights


def _parse_overrides(specs: list[str]) -> tuple[RatingOverride, ...]:
    overrides = []
    for spec in specs:
        if "=" not in spec:
            raise LangscoreError(f"--override expects TARGET=VALUE, got {spec!r}")
        target, _, raw = spec.partition("=")
        parts = target.split(":")
        if len(parts) == 2:
            subject, parameter, sub = parts[0], parts[1], None
        elif len(parts) == 3:
            subject, parameter, sub = parts
        else:
            raise LangscoreError(
                f"--override target must be SUBJECT:PARAM or SUBJECT:PARAM:SUB, got {target!r}"
            )
        raw = raw.strip()
        try:
            number = float(raw)
        except ValueError:
            overrides.append(
                RatingOverride(subject=subject, parameter=parameter, sub_parameter=sub, level=parse_level(raw))
            )
            continue
        if sub is None:
            overrides.append(RatingOverride(subject=subject, parameter=parameter, score=number))
        else:
            overrides.append(
                RatingOverride(subject=subject, parameter=parameter, sub_parameter=sub, raw=number)
            )
    return tuple(overrides)


def _profile_args(dataset: Dataset, args) -> tuple[Dataset, str, dict[str, float]]:
    """Resolve --weights/--set into (dataset, profile name, weight overrides).

    A --weights file is added to the dataset's profile list under its own
    name (the dataset object itself is immutable; a copy is returned).
    """
    import dataclasses

    weights = _parse_weight_sets(getattr(args, "set", []) or [])
    profile_name = getattr(args, "profile", "default")
    if getattr(args, "weights", None):
        path = args.weights
        data = json.loads(Path(path).read_text(encoding="utf-8"))
        unknown = set(data) - {"name", "weights"}
        if unknown:
            raise LangscoreError(f"unknown fields in weights file: {sorted(unknown)}")
        profile = WeightProfile(name=data.get("name", Path(path).stem), weights=data["weights"])
        others = tuple(p for p in dataset.profiles if p.name != profile.name)
        dataset = dataclasses.replace(dataset, profiles=others + (profile,))
        profile_name = profile.name
    return dataset, profile_name, weights


def _category(args) -> CategoryFilter:
    return CATEGORY_TOKENS[getattr(args, "category", "all")]


def _emit(text: str) -> None:
    sys.stdout.write(text)


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=["table", "csv", "json", "md"], default="table")


def _add_dataset(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("dataset", nargs="?", default=None, help="dataset file (default: bundled)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="langscore",
        description="Multi-criteria scoring, ranking, and what-if analysis over rating datasets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a dataset; exit 1 with one line per violation")
    _add_dataset(p)

    for name, help_text in (
        ("score", "score cards for every subject"),
        ("rank", "ranking with bounded and unbounded scores"),
    ):
        p = sub.add_parser(name, help=help_text)
        _add_dataset(p)
        p.add_argument("--profile", default="default")
        p.add_argument("--weights", help="weight profile file (JSON: {name, weights})")
        p.add_argument("--set", action="append", metavar="PARAM=W", help="override one weight")
        p.add_argument("--category", choices=["all", "tech", "env"], default="all")
        _add_format(p)

    p = sub.add_parser("transition", help="transition-cost matrix, totals, and ratings")
    _add_dataset(p)
    _add_format(p)

    p = sub.add_parser("demand", help="normalized industry-demand scores")
    _add_dataset(p)
    _add_format(p)

    p = sub.add_parser("whatif", help="score under weight/rating overrides")
    _add_dataset(p)
    p.add_argument("--profile", default="default")
    p.add_argument("--weights", help="weight profile file (JSON: {name, weights})")
    p.add_argument("--set", action="append", metavar="PARAM=W", help="override one weight")
    p.add_argument(
        "--override",
        action="append",
        metavar="SUBJ:PARAM[:SUB]=VALUE",
        help="override a rating cell (level token, unit score, or raw value)",
    )
    p.add_argument("--category", choices=["all", "tech", "env"], default="all")
    _add_format(p)

    p = sub.add_parser("sweep", help="weight sweep with rankings and crossovers")
    _add_dataset(p)
    p.add_argument("--param", required=True)
    p.add_argument("--from", dest="w_min", type=float, required=True)
    p.add_argument("--to", dest="w_max", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--profile", default="default")
    p.add_argument("--category", choices=["all", "tech", "env"], default="all")
    _add_format(p)

    p = sub.add_parser("report", help="render one report kind")
    _add_dataset(p)
    p.add_argument(
        "--kind",
        required=True,
        choices=[
            "parameter-table",
            "overall-table",
            "demand-table",
            "transition-table",
            "whatif-table",
            "discrepancy-report",
        ],
    )
    _add_format(p)
    p.add_argument("--decimals", type=int, default=None, help="display decimals (default 2; 4 for discrepancies)")
    p.add_argument("--published", help="published tables file (for discrepancy-report)")
    p.add_argument("--profile", default="default")
    p.add_argument("--set", action="append", metavar="PARAM=W")
    p.add_argument("--override", action="append", metavar="SUBJ:PARAM[:SUB]=VALUE")
    p.add_argument("--category", choices=["all", "tech", "env"], default="all")

    p = sub.add_parser("serve", help="read-only JSON API plus the what-if UI")
    p.add_argument("--addr", default="127.0.0.1:8099", metavar="HOST:PORT")
    p.add_argument("--dataset", default=None)
    p.add_argument("--published", default=None)
    p.add_argument("--ui", default=None, help="directory of built UI assets to serve at /")

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    except LangscoreError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except KeyError as exc:
        print(f"error: {exc.args[0] if exc.args else exc}", file=sys.stderr)
        return 1
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _dispatch(args) -> int:
    if args.command == "validate":
        dataset = _load(args.dataset)
        report = validate_dataset(dataset)
        _emit(report.render() + "\n")
        return 0 if report.ok else 1

    if args.command == "serve":
        host, _, port = args.addr.partition(":")
        dataset = _load(args.dataset)
        published = None
        try:
            published = _load_published_for(args.dataset, args.published)
        except LangscoreError:
            pass  # service runs without a discrepancy source
        serve(host or "127.0.0.1", int(port or 0), dataset, published=published, ui_dir=args.ui)
        return 0

    dataset = _load(getattr(args, "dataset", None))

    if args.command in ("score", "rank", "whatif"):
        from .reports import build_overall_table, build_parameter_table
        from .sensitivity import what_if

        dataset, profile_name, weights = _profile_args(dataset, args)
        overrides = _parse_overrides(getattr(args, "override", None) or [])
        request = WhatIfRequest(
            profile=profile_name, weights=weights, overrides=overrides, category=_category(args)
        )
        # score/rank share the what-if machinery so --set/--category work
        if args.command == "whatif":
            spec = ReportSpec(kind="whatif-table", format=args.format)
            table = build_report(spec, dataset, request=request)
        else:
            result = what_if(dataset, request)
            if args.command == "rank":
                spec = ReportSpec(kind="overall-table", format=args.format)
                table = build_overall_table(result.scorecards)
            else:
                spec = ReportSpec(kind="parameter-table", format=args.format)
                table = build_parameter_table(dataset, result.scorecards)
        _emit(render_report(spec, table))
        return 0

    if args.command == "transition":
        spec = ReportSpec(kind="transition-table", format=args.format)
        _emit(render_report(spec, build_report(spec, dataset)))
        return 0

    if args.command == "demand":
        spec = ReportSpec(kind="demand-table", format=args.format)
        _emit(render_report(spec, build_report(spec, dataset)))
        return 0

    if args.command == "sweep":
        result = weight_sweep(
            dataset,
            args.param,
            args.w_min,
            args.w_max,
            args.steps,
            profile=dataset.profile(args.profile),
            category=_category(args),
        )
        if args.format == "json":
            _emit(json.dumps(result.to_json(), indent=2, ensure_ascii=False) + "\n")
        else:
            from .reports import Table, render_csv, render_markdown, render_plain

            columns = ("weight", "ranking")
            rows = tuple((w, " > ".join(r)) for w, r in zip(result.grid, result.rankings))
            table = Table(columns=columns, rows=rows, payload=result.to_json())
            renderer = {"csv": render_csv, "md": render_markdown, "table": render_plain}[args.format]
            _emit(renderer(table, 3))
            if args.format == "table":
                crossings = ", ".join(
                    f"{c.subjects[0]}<->{c.subjects[1]} @ {c.weight:.4f}" for c in result.crossovers
                )
                _emit(f"crossovers: {crossings or 'none in range'}\n")
        return 0

    if args.command == "report":
        decimals = args.decimals
        if decimals is None:
            decimals = 4 if args.kind == "discrepancy-report" else 2
        spec = ReportSpec(kind=args.kind, format=args.format, decimals=decimals)
        published = None
        if args.kind == "discrepancy-report":
            published = _load_published_for(args.dataset, args.published)
        request = None
        if args.kind == "whatif-table":
            request = WhatIfRequest(
                profile=args.profile,
                weights=_parse_weight_sets(args.set or []),
                overrides=_parse_overrides(args.override or []),
                category=_category(args),
            )
        table = build_report(spec, dataset, published=published, request=request, profile_name=args.profile)
        _emit(render_report(spec, table))
        return 0

    raise AssertionError(f"unhandled command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
