import pytest

from langscore import (
    Level,
    RatingOverride,
    UnknownOverrideTargetError,
    WhatIfRequest,
    contribution,
    rank,
    rank_stability,
    weight_sweep,
    what_if,
)


def test_empty_request_is_identity(dataset, profile):
    baseline = rank(dataset, profile)
    result = what_if(dataset, WhatIfRequest())
    assert [c.to_json() for c in result.scorecards] == [c.to_json() for c in baseline]


def test_no_mutation_across_calls(dataset):
    before = dataset.canonical_json()
    what_if(
        dataset,
        WhatIfRequest(
            weights={"industry-demand": 3.0},
            overrides=(
                RatingOverride(
                    subject="cpp",
                    parameter="polymorphism",
                    sub_parameter="interfaces",
                    level=Level.FULLY,
                ),
                RatingOverride(subject="java", parameter="foolproof-ide", score=0.2),
                RatingOverride(
                    subject="python",
                    parameter="industry-demand",
                    sub_parameter="job-posts",
                    raw=1.0,
                ),
            ),
        ),
    )
    weight_sweep(dataset, "industry-demand", 1, 5, 11)
    assert dataset.canonical_json() == before


def test_demand_weight_three_environmental_only(dataset):
    """Hand-sum oracle: 3*demand + contemporary + transferability + ide."""
    demand = {
        "cpp": (12.96 / 14.51 + 86505 / 222852 + 212503 / 515428) / 3,
        "java": (13.23 / 14.51 + 1.0 + 443508 / 515428) / 3,
        "python": (1.0 + 164852 / 222852 + 1.0) / 3,
        "csharp": (8.21 / 14.51 + 56062 / 222852 + 304892 / 515428) / 3,
    }
    contemporary = {"cpp": (1 + 0 + 0.7) / 3, "java": 1.0, "python": (0 + 0.4 + 0.4) / 3, "csharp": 1.0}
    transferable = {"cpp": 1.0, "java": 1.0, "python": 0.7, "csharp": 1.0}
    ide = {"cpp": 0.57, "java": 0.85, "python": 0.77, "csharp": 0.85}
    oracle = {
        s: 3 * demand[s] + contemporary[s] + transferable[s] + ide[s] for s in demand
    }

    result = what_if(
        dataset, WhatIfRequest(weights={"industry-demand": 3.0}, category="environmental-only")
    )
    assert result.ranking == ("java", "python", "csharp", "cpp")
    for card in result.scorecards:
        assert card.ls == pytest.approx(oracle[card.subject], abs=1e-12)
        assert card.ls_tech == 0.0
        # bounded divisor comes from the weights in scope: 3 + 1 + 1 + 1
        assert card.ls_bounded == pytest.approx(card.ls / 6.0, rel=1e-15)
    assert result.card("java").ls == pytest.approx(5.61, abs=0.05)


def test_scaling_all_weights_by_two_is_exact(dataset, profile):
    baseline = rank(dataset, profile)
    doubled = what_if(dataset, WhatIfRequest(weights={p.id: 2.0 for p in dataset.framework.parameters}))
    assert tuple(c.subject for c in baseline) == doubled.ranking
    for base, two in zip(baseline, doubled.scorecards):
        # powers of two scale floats exactly
        assert two.ls == 2.0 * base.ls
        assert two.ls_bounded == base.ls_bounded


def test_single_cell_upgrade_strictly_increases(dataset, profile):
    base = {c.subject: c.ls for c in rank(dataset, profile)}
    result = what_if(
        dataset,
        WhatIfRequest(
            overrides=(
                RatingOverride(
                    subject="cpp",
                    parameter="polymorphism",
                    sub_parameter="interfaces",
                    level=Level.FULLY,  # was NO
                ),
            )
        ),
    )
    assert result.card("cpp").ls > base["cpp"]
    for other in ("java", "python", "csharp"):
        assert result.card(other).ls == pytest.approx(base[other], abs=1e-15)


def test_raw_demand_override_flows_through(dataset):
    result = what_if(
        dataset,
        WhatIfRequest(
            overrides=(
                RatingOverride(
                    subject="csharp",
                    parameter="industry-demand",
                    sub_parameter="job-posts",
                    raw=515428.0,  # match the maximum
                ),
            )
        ),
    )
    base = what_if(dataset, WhatIfRequest())
    assert result.card("csharp").ls > base.card("csharp").ls


def test_override_validation_errors(dataset):
    with pytest.raises(UnknownOverrideTargetError):
        what_if(dataset, WhatIfRequest(weights={"charisma": 2.0}))
    with pytest.raises(ValueError):
        what_if(dataset, WhatIfRequest(weights={"inheritance": 0.0}))
    with pytest.raises(UnknownOverrideTargetError):
        what_if(
            dataset,
            WhatIfRequest(
                overrides=(
                    RatingOverride(subject="ada", parameter="inheritance", sub_parameter="base-class-access", level=Level.NO),
                )
            ),
        )
    with pytest.raises(UnknownOverrideTargetError):
        what_if(
            dataset,
            WhatIfRequest(overrides=(RatingOverride(subject="java", parameter="inheritance", score=0.5),)),
        )
    with pytest.raises(ValueError):
        what_if(
            dataset,
            WhatIfRequest(overrides=(RatingOverride(subject="java", parameter="foolproof-ide", score=1.5),)),
        )


def test_rating_override_requires_one_value():
    with pytest.raises(ValueError):
        RatingOverride(subject="a", parameter="b")
    with pytest.raises(ValueError):
        RatingOverride(subject="a", parameter="b", level=Level.NO, score=0.5)


# ---------------------------------------------------------------------------
# Sweeps


def test_sweep_grid_and_baseline_ranking(dataset):
    result = weight_sweep(dataset, "industry-demand", 1.0, 5.0, 41)
    assert len(result.grid) == 41
    assert result.grid[0] == 1.0 and result.grid[-1] == 5.0
    assert result.rankings[0] == ("csharp", "java", "cpp", "python")


def test_sweep_rankings_agree_with_engine(dataset, profile):
    result = weight_sweep(dataset, "inheritance", 0.25, 4.0, 7)
    for weight, ranking in zip(result.grid, result.rankings):
        engine = what_if(dataset, WhatIfRequest(weights={"inheritance": weight}))
        assert ranking == engine.ranking


def test_sweep_closed_form_crossover_value(dataset):
    """The csharp/java crossover on the demand weight, derived by hand:
    w* solves ls_csharp(w) = ls_java(w) for affine ls(w) = base + w*unit."""
    cards = {c.subject: c for c in rank(dataset, dataset.profile())}
    unit = {
        s: cards[s].parameter_score("industry-demand").unit_score for s in ("csharp", "java")
    }
    base = {s: cards[s].ls - unit[s] for s in ("csharp", "java")}
    expected = (base["java"] - base["csharp"]) / (unit["csharp"] - unit["java"])

    result = weight_sweep(dataset, "industry-demand", 1.0, 5.0, 9)
    assert len(result.crossovers) == 1
    crossover = result.crossovers[0]
    assert crossover.subjects == ("csharp", "java")
    assert crossover.weight == pytest.approx(expected, rel=1e-12)
    assert crossover.weight == pytest.approx(1.7237, abs=5e-4)
    assert 1.0 <= crossover.weight <= 5.0


def test_sweep_dominance_has_no_crossovers(dataset):
    # below every crossover: the ranking never changes in [0.2, 1.0]
    result = weight_sweep(dataset, "industry-demand", 0.2, 1.0, 17)
    assert result.crossovers == ()
    assert len(set(result.rankings)) == 1


def test_sweep_range_validation(dataset):
    with pytest.raises(ValueError):
        weight_sweep(dataset, "inheritance", 0.0, 2.0, 5)
    with pytest.raises(ValueError):
        weight_sweep(dataset, "inheritance", 2.0, 1.0, 5)
    with pytest.raises(ValueError):
        weight_sweep(dataset, "inheritance", 1.0, 2.0, 1)
    with pytest.raises(UnknownOverrideTargetError):
        weight_sweep(dataset, "nope", 1.0, 2.0, 5)


# ---------------------------------------------------------------------------
# Contributions and stability


def test_contribution_shares_sum_to_one(dataset, profile):
    for subject in dataset.subject_ids:
        breakdown = contribution(dataset, subject, profile)
        assert not breakdown.zero_total
        assert sum(c.share for c in breakdown.contributions) == pytest.approx(1.0, abs=1e-9)
    csharp = contribution(dataset, "csharp", profile)
    demand_share = next(c for c in csharp.contributions if c.parameter == "industry-demand")
    assert 0.06 < demand_share.share < 0.07


def test_contribution_zero_total_flag():
    from langscore import (
        Dataset,
        Framework,
        Parameter,
        Rating,
        RatingScale,
        SubParameter,
        Subject,
        WeightProfile,
    )

    framework = Framework(
        scale=RatingScale(),
        parameters=(
            Parameter(
                id="a",
                name="A",
                category="technical",
                sub_parameters=(SubParameter(id="a0", name="a0"),),
                score_mode="direct-override",
            ),
        ),
    )
    zero = Dataset(
        framework=framework,
        subjects=(Subject(id="s", name="S"),),
        ratings=(Rating(subject="s", parameter="a", sub_parameter=None, value=0.0),),
        profiles=(WeightProfile(name="default", weights={"a": 1.0}),),
    )
    breakdown = contribution(zero, "s")
    assert breakdown.zero_total
    assert all(c.share == 0.0 for c in breakdown.contributions)


def test_contribution_scaling_invariance(dataset, profile):
    base = contribution(dataset, "java", profile)
    doubled_profile = profile.scaled(2.0)
    doubled = contribution(dataset, "java", doubled_profile)
    for a, b in zip(base.contributions, doubled.contributions):
        assert b.share == pytest.approx(a.share, rel=1e-12)


def test_rank_stability_upper_bound_matches_crossover(dataset):
    interval = rank_stability(dataset, "industry-demand")
    sweep = weight_sweep(dataset, "industry-demand", 1.0, 5.0, 9)
    assert interval.top_subject == "csharp"
    assert interval.lower is None  # csharp leads all the way down to zero weight
    assert interval.upper == pytest.approx(sweep.crossovers[0].weight, rel=1e-12)
    assert (interval.lower or 0.0) <= interval.current_weight <= interval.upper


def test_rank_stability_dominance_is_open_ended(dataset):
    # java holds the top parameter score on contemporary features among the
    # top two, so pushing that weight up never dethrones the leader via it
    interval = rank_stability(dataset, "contemporary-features")
    assert interval.top_subject == "csharp"
    # csharp and java share unit score 1.0 here: parallel lines, no crossover
    assert interval.upper is None or interval.upper > 1.0


def test_rank_stability_contains_current_weight(dataset):
    for parameter in dataset.framework.parameters:
        interval = rank_stability(dataset, parameter.id)
        lower = interval.lower if interval.lower is not None else 0.0
        assert lower <= interval.current_weight
        if interval.upper is not None:
            assert interval.current_weight <= interval.upper
