"""Regenerate the bundled dataset and published-tables files from the source
tables. Run from the repo root: python tools/make_data.py"""

import json
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "src" / "langscore" / "data"

SUBJECTS = [
    ("cpp", "C++", {"paradigm": "multiparadigm", "typing": "static", "strength": "strong"}),
    ("java", "Java", {"paradigm": "object-oriented", "typing": "static", "strength": "strong"}),
    ("python", "Python", {"paradigm": "multiparadigm", "typing": "dynamic", "strength": "strong"}),
    ("csharp", "C#", {"paradigm": "object-oriented", "typing": "static", "strength": "strong"}),
]

PARAMETERS = [
    {
        "id": "abstract-encapsulation",
        "name": "Encapsulation in Abstract Datatypes",
        "category": "technical",
        "score_mode": "aggregate-sub-ratings",
        "sub_parameters": [
            {"id": "implicit-access-modifier", "name": "Implicit Access Modifier", "kind": "qualitative"},
            {"id": "properties", "name": "Properties", "kind": "qualitative"},
            {"id": "auto-implemented-properties", "name": "Auto Implemented Properties", "kind": "qualitative"},
            {"id": "nested-classes", "name": "Nested Classes", "kind": "qualitative"},
        ],
    },
    {
        "id": "naming-encapsulation",
        "name": "Naming Encapsulation",
        "category": "technical",
        "score_mode": "aggregate-sub-ratings",
        "sub_parameters": [
            {"id": "package-access", "name": "Package Access Only", "kind": "qualitative"},
            {"id": "friend-classes", "name": "Friend Classes", "kind": "qualitative"},
            {"id": "multi-file-definition", "name": "Definition in Multiple Files", "kind": "qualitative"},
        ],
    },
    {
        "id": "object-relationships",
        "name": "Relationships Among Objects",
        "category": "technical",
        "score_mode": "aggregate-sub-ratings",
        "sub_parameters": [
            {"id": "uniform-access", "name": "Uniform Access", "kind": "qualitative"},
            {"id": "implicit-initialization", "name": "Implicit Initialization of Attributes", "kind": "qualitative"},
            {"id": "constant-initialization", "name": "Initialization of Constant Attributes", "kind": "qualitative"},
            {"id": "constructor-overloading", "name": "Constructor Overloading", "kind": "qualitative"},
            {"id": "copy-constructor", "name": "Copy Constructor", "kind": "qualitative"},
            {"id": "automatic-memory-management", "name": "Automatic Memory Management", "kind": "qualitative"},
        ],
    },
    {
        "id": "inheritance",
        "name": "Inheritance",
        "category": "technical",
        "score_mode": "aggregate-sub-ratings",
        "sub_parameters": [
            {"id": "base-class-access", "name": "Base Class Access Specification", "kind": "qualitative"},
            {"id": "multiple-inheritance", "name": "Multiple Inheritance", "kind": "qualitative"},
            {"id": "non-extendable-classes", "name": "Non-Extendable Classes", "kind": "qualitative"},
        ],
    },
    {
        "id": "polymorphism",
        "name": "Polymorphism and Realization",
        "category": "technical",
        "score_mode": "aggregate-sub-ratings",
        "sub_parameters": [
            {"id": "default-dynamic-binding", "name": "Default Dynamic Binding", "kind": "qualitative"},
            {"id": "override-keyword", "name": "Enforced Override Keyword", "kind": "qualitative"},
            {"id": "non-overridable-methods", "name": "Prevent Method Overriding", "kind": "qualitative"},
            {"id": "operator-overloading", "name": "Operator Overloading", "kind": "qualitative"},
            {"id": "interfaces", "name": "Interface Support", "kind": "qualitative"},
        ],
    },
    {
        "id": "industry-demand",
        "name": "Demand in Industry",
        "category": "environmental",
        "score_mode": "aggregate-sub-ratings",
        "sub_parameters": [
            {"id": "web-search-share", "name": "Web Search Share", "kind": "quantitative-raw"},
            {"id": "active-repositories", "name": "Active Repositories", "kind": "quantitative-raw"},
            {"id": "job-posts", "name": "Job Posts", "kind": "quantitative-raw"},
        ],
    },
    {
        "id": "contemporary-features",
        "name": "Contemporary Features",
        "category": "environmental",
        "score_mode": "aggregate-sub-ratings",
        "sub_parameters": [
            {"id": "generics", "name": "Generics", "kind": "qualitative"},
            {"id": "default-exception-handler", "name": "Default Exception Handler", "kind": "qualitative"},
            {"id": "record-classes", "name": "Record Classes", "kind": "qualitative"},
        ],
    },
    {
        "id": "transferability",
        "name": "Easy Transferable",
        "category": "environmental",
        "score_mode": "aggregate-sub-ratings",
        "sub_parameters": [
            {"id": "transition-cost-rating", "name": "Transition Cost Rating", "kind": "qualitative"},
        ],
    },
    {
        "id": "foolproof-ide",
        "name": "Foolproof IDE",
        "category": "environmental",
        "score_mode": "direct-override",
        "sub_parameters": [
            {"id": "syntax-checker", "name": "Syntax Checker", "kind": "qualitative"},
            {"id": "auto-completion", "name": "Automatic Code Completion", "kind": "qualitative"},
            {"id": "multi-language-support", "name": "Multiple Language Support", "kind": "qualitative"},
            {"id": "debugger", "name": "Debugger Support", "kind": "qualitative"},
        ],
    },
]

# Qualitative cells per parameter, in the sub-parameter order declared above.
QUALITATIVE = {
    "abstract-encapsulation": {
        "cpp": ["fully", "no", "no", "partially"],
        "java": ["partially", "no", "no", "fully"],
        "python": ["no", "partially", "mostly", "mostly"],
        "csharp": ["fully", "fully", "fully", "partially"],
    },
    "naming-encapsulation": {
        "cpp": ["no", "fully", "fully"],
        "java": ["fully", "mostly", "no"],
        "python": ["mostly", "no", "no"],
        "csharp": ["partially", "mostly", "partially"],
    },
    "object-relationships": {
        "cpp": ["mostly", "no", "fully", "fully", "partially", "mostly"],
        "java": ["fully", "fully", "mostly", "fully", "partially", "fully"],
        "python": ["fully", "no", "no", "no", "no", "fully"],
        "csharp": ["fully", "fully", "fully", "fully", "fully", "fully"],
    },
    "inheritance": {
        "cpp": ["fully", "fully", "fully"],
        "java": ["mostly", "no", "fully"],
        "python": ["no", "fully", "no"],
        "csharp": ["mostly", "no", "fully"],
    },
    "polymorphism": {
        "cpp": ["partially", "partially", "fully", "fully", "no"],
        "java": ["fully", "mostly", "fully", "no", "fully"],
        "python": ["mostly", "no", "no", "partially", "no"],
        "csharp": ["mostly", "fully", "fully", "fully", "fully"],
    },
    "contemporary-features": {
        "cpp": ["fully", "no", "mostly"],
        "java": ["fully", "fully", "fully"],
        "python": ["no", "partially", "partially"],
        "csharp": ["fully", "fully", "fully"],
    },
    "transferability": {
        "cpp": ["fully"],
        "java": ["fully"],
        "python": ["mostly"],
        "csharp": ["fully"],
    },
}

# Direct-override unit scores solved from the published overall totals; no
# per-facet table for this parameter survives in the source.
IDE_SCORES = {"cpp": 0.57, "java": 0.85, "python": 0.77, "csharp": 0.85}

DEMAND = {
    "as_of": "2022-07-31",
    "entries": [
        {"subject": "cpp", "web_search_share": 12.96, "active_repositories": 86505, "job_posts": 212503},
        {"subject": "java", "web_search_share": 13.23, "active_repositories": 222852, "job_posts": 443508},
        {"subject": "python", "web_search_share": 14.51, "active_repositories": 164852, "job_posts": 515428},
        {"subject": "csharp", "web_search_share": 8.21, "active_repositories": 56062, "job_posts": 304892},
    ],
    "sources": [
        "TIOBE index snapshot (web search share, percent)",
        "github.info active repository counts",
        "devjobsscanner job post counts",
    ],
}

TRANSITIONS = [
    ("cpp", "java", [1, 0, 0]),
    ("cpp", "python", [1, 1, 1]),
    ("cpp", "csharp", [1, 0, 0]),
    ("java", "cpp", [1, 0, 0]),
    ("java", "python", [1, 1, 1]),
    ("java", "csharp", [0, 0, 0]),
    ("python", "cpp", [1, 1, 1]),
    ("python", "java", [1, 1, 1]),
    ("python", "csharp", [1, 1, 1]),
    ("csharp", "cpp", [1, 0, 0]),
    ("csharp", "java", [0, 0, 0]),
    ("csharp", "python", [1, 1, 1]),
]

# Published per-parameter unit scores. Status "published" marks values as
# printed; "reconstructed" fills columns the source truncated (recomputed
# from its rating cells / stated rules); "inferred" marks the IDE scores.
PUBLISHED_CELLS = {
    "abstract-encapsulation": ("technical-scores", {
        "cpp": (0.42, "published"),
        "java": (0.42, "published"),
        "python": (0.52, "published"),
        "csharp": (0.92, "published"),
    }),
    "naming-encapsulation": ("technical-scores", {
        "cpp": (0.5, "published"),
        "java": (0.35, "published"),
        "python": (0.1, "published"),
        "csharp": (0.37, "published"),
    }),
    "object-relationships": ("technical-scores", {
        "cpp": (0.58, "published"),
        "java": (0.85, "published"),
        "python": (0.33, "published"),
        "csharp": (1.0, "published"),
    }),
    "inheritance": ("technical-scores", {
        "cpp": (1.0, "published"),
        "java": (0.4, "published"),
        "python": (0.3, "published"),
        "csharp": (0.4, "published"),
    }),
    "polymorphism": ("technical-scores", {
        "cpp": (0.56, "reconstructed"),
        "java": (0.74, "reconstructed"),
        "python": (0.22, "reconstructed"),
        "csharp": (0.94, "reconstructed"),
    }),
    "industry-demand": ("environmental-scores", {
        "cpp": (0.56, "published"),
        "java": (0.92, "published"),
        "python": (0.91, "published"),
        "csharp": (0.46, "published"),
    }),
    "contemporary-features": ("environmental-scores", {
        "cpp": (0.56, "published"),
        "java": (1.0, "published"),
        "python": (0.46, "published"),
        "csharp": (1.0, "published"),
    }),
    "transferability": ("environmental-scores", {
        "cpp": (1.0, "reconstructed"),
        "java": (1.0, "reconstructed"),
        "python": (0.7, "reconstructed"),
        "csharp": (1.0, "reconstructed"),
    }),
    "foolproof-ide": ("environmental-scores", {
        "cpp": (0.57, "inferred"),
        "java": (0.85, "inferred"),
        "python": (0.77, "inferred"),
        "csharp": (0.85, "inferred"),
    }),
}

OVERALL = [
    {"subject": "csharp", "ls": 6.94, "ls_bounded": 0.77},
    {"subject": "java", "ls": 6.59, "ls_bounded": 0.73},
    {"subject": "cpp", "ls": 5.75, "ls_bounded": 0.63},
    {"subject": "python", "ls": 4.34, "ls_bounded": 0.48},
]

REWEIGHTED = {
    "weights": {"industry-demand": 3},
    "category": "environmental-only",
    "published_divisor": 11,
    "rows": [
        {"subject": "java", "ls": 5.61, "ls_bounded": 0.51},
        {"subject": "python", "ls": 4.66, "ls_bounded": 0.42},
        {"subject": "csharp", "ls": 4.23, "ls_bounded": 0.38},
        {"subject": "cpp", "ls": 3.81, "ls_bounded": 0.34},
    ],
}


def build_dataset() -> dict:
    ratings = []
    for parameter in PARAMETERS:
        pid = parameter["id"]
        if parameter["score_mode"] == "direct-override":
            for sid, _, _ in SUBJECTS:
                ratings.append(
                    {"subject": sid, "parameter": pid, "value": IDE_SCORES[sid], "provenance": "inferred"}
                )
            continue
        if pid == "industry-demand":
            continue  # raw values live in the demand snapshot
        subs = [s["id"] for s in parameter["sub_parameters"]]
        for sid, _, _ in SUBJECTS:
            levels = QUALITATIVE[pid][sid]
            assert len(levels) == len(subs), (pid, sid)
            for sub_id, level in zip(subs, levels):
                ratings.append(
                    {
                        "subject": sid,
                        "parameter": pid,
                        "sub_parameter": sub_id,
                        "value": level,
                        "provenance": "paper",
                    }
                )
    return {
        "framework": {
            "scale": {"no": 0, "partially": 0.4, "mostly": 0.7, "fully": 1},
            "parameters": PARAMETERS,
        },
        "subjects": [
            {"id": sid, "name": name, "attributes": attrs} for sid, name, attrs in SUBJECTS
        ],
        "ratings": ratings,
        "demand": DEMAND,
        "transition_costs": [
            {"from": a, "to": b, "costs": costs} for a, b, costs in TRANSITIONS
        ],
        "weight_profiles": [
            {"name": "default", "weights": {p["id"]: 1 for p in PARAMETERS}},
        ],
    }


def build_published() -> dict:
    cells = []
    for pid, (source, by_subject) in PUBLISHED_CELLS.items():
        for sid, _, _ in SUBJECTS:
            value, status = by_subject[sid]
            cells.append(
                {"subject": sid, "parameter": pid, "value": value, "status": status, "source": source}
            )
    return {
        "description": (
            "Per-parameter unit scores and totals as printed in the source study's "
            "score tables, with reconstructed values for truncated columns and "
            "inferred values where no table survives. Comparison targets for the "
            "discrepancy report; the engine never scores from these."
        ),
        "parameter_scores": cells,
        "overall_scores": OVERALL,
        "reweighted_scores": REWEIGHTED,
    }


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    (OUT / "paper-2023-oop.json").write_text(
        json.dumps(build_dataset(), indent=2, ensure_ascii=False) + "\n", encoding="utf-8"
    )
    (OUT / "paper-2023-oop.published.json").write_text(
        json.dumps(build_published(), indent=2, ensure_ascii=False) + "\n", encoding="utf-8"
    )
    print(f"wrote dataset and published tables under {OUT}")


if __name__ == "__main__":
    main()
