"""Shared fixtures and the seeded random-dataset generator.

Property tests use deterministic seeded generation (not time-based) so runs
are reproducible byte-for-byte.
"""

from __future__ import annotations

import random

import pytest

from langscore import (
    Dataset,
    DemandEntry,
    DemandSnapshot,
    Framework,
    Level,
    Parameter,
    Rating,
    RatingScale,
    Subject,
    SubParameter,
    WeightProfile,
    load_bundled_dataset,
    load_bundled_published,
)

LEVELS = (Level.NO, Level.PARTIALLY, Level.MOSTLY, Level.FULLY)


@pytest.fixture(scope="session")
def dataset() -> Dataset:
    return load_bundled_dataset()


@pytest.fixture(scope="session")
def published():
    return load_bundled_published()


@pytest.fixture(scope="session")
def profile(dataset) -> WeightProfile:
    return dataset.profile()


def random_dataset(rng: random.Random, max_subjects: int = 5, max_parameters: int = 5) -> Dataset:
    """A small valid dataset: random parameters (some direct-override, maybe
    one quantitative), random complete ratings, random positive weights."""
    n_subjects = rng.randint(1, max_subjects)
    subjects = tuple(Subject(id=f"s{i}", name=f"Subject {i}") for i in range(n_subjects))

    n_parameters = rng.randint(1, max_parameters)
    parameters = []
    include_quantitative = rng.random() < 0.3
    quantitative_index = rng.randrange(n_parameters) if include_quantitative else -1
    for i in range(n_parameters):
        category = rng.choice(["technical", "environmental"])
        if i == quantitative_index:
            parameters.append(
                Parameter(
                    id=f"p{i}",
                    name=f"Quantitative {i}",
                    category=category,
                    sub_parameters=tuple(
                        SubParameter(id=f"p{i}q{j}", name=f"q{j}", kind="quantitative-raw")
                        for j in range(3)
                    ),
                )
            )
        elif rng.random() < 0.2:
            parameters.append(
                Parameter(
                    id=f"p{i}",
                    name=f"Override {i}",
                    category=category,
                    sub_parameters=(SubParameter(id=f"p{i}s0", name="s0"),),
                    score_mode="direct-override",
                )
            )
        else:
            parameters.append(
                Parameter(
                    id=f"p{i}",
                    name=f"Parameter {i}",
                    category=category,
                    sub_parameters=tuple(
                        SubParameter(id=f"p{i}s{j}", name=f"s{j}")
                        for j in range(rng.randint(1, 4))
                    ),
                )
            )
    framework = Framework(scale=RatingScale(), parameters=tuple(parameters))

    ratings = []
    for subject in subjects:
        for parameter in parameters:
            if parameter.score_mode == "direct-override":
                ratings.append(
                    Rating(
                        subject=subject.id,
                        parameter=parameter.id,
                        sub_parameter=None,
                        value=rng.random(),
                    )
                )
            elif parameter.kind == "qualitative":
                for sub in parameter.sub_parameters:
                    ratings.append(
                        Rating(
                            subject=subject.id,
                            parameter=parameter.id,
                            sub_parameter=sub.id,
                            value=rng.choice(LEVELS),
                        )
                    )

    demand = None
    if include_quantitative:
        demand = DemandSnapshot(
            as_of="2024-01-01",
            entries=tuple(
                DemandEntry(
                    subject=subject.id,
                    web_search_share=rng.uniform(0.1, 100.0),
                    active_repositories=rng.uniform(1.0, 1e6),
                    job_posts=rng.uniform(1.0, 1e6),
                )
                for subject in subjects
            ),
        )

    profiles = (
        WeightProfile(
            name="default",
            weights={p.id: rng.uniform(0.1, 5.0) for p in parameters},
        ),
    )
    return Dataset(
        framework=framework,
        subjects=subjects,
        ratings=tuple(ratings),
        demand=demand,
        profiles=profiles,
        name="random",
    )
