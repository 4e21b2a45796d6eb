import pytest

from langscore import (
    CostVector,
    Level,
    MissingAttributesError,
    Subject,
    SubjectAttributes,
    TransitionCostMatrix,
    UnknownSubjectError,
    cost_rating,
    derive_cost_vector,
    pair_cost,
    subject_rating,
    total_cost,
)


def test_pair_costs_from_bundled_matrix(dataset):
    matrix = dataset.transition_costs
    assert pair_cost("cpp", "python", matrix).components == (1, 1, 1)
    assert pair_cost("java", "csharp", matrix).components == (0, 0, 0)
    assert pair_cost("java", "java", matrix).components == (0, 0, 0)


def test_unknown_subject_raises(dataset):
    with pytest.raises(UnknownSubjectError):
        pair_cost("cpp", "scala", dataset.transition_costs)
    with pytest.raises(UnknownSubjectError):
        pair_cost("scala", "scala", dataset.transition_costs)


def test_totals_match_brute_force_double_loop(dataset):
    matrix = dataset.transition_costs
    expected = {"cpp": 5, "java": 4, "python": 9, "csharp": 4}
    for subject, total in expected.items():
        assert total_cost(subject, matrix) == total
        brute = sum(
            sum(pair_cost(subject, other, matrix).components)
            for other in matrix.subjects
            if other != subject
        )
        assert brute == total


def test_totals_invariant_under_entry_order():
    entries = {
        ("a", "b"): CostVector(1, 0, 1),
        ("b", "a"): CostVector(0, 1, 0),
        ("a", "c"): CostVector(1, 1, 1),
        ("c", "a"): CostVector(0, 0, 0),
        ("b", "c"): CostVector(0, 0, 1),
        ("c", "b"): CostVector(1, 0, 0),
    }
    forward = TransitionCostMatrix(costs=dict(entries))
    backward = TransitionCostMatrix(costs=dict(reversed(list(entries.items()))))
    for subject in ("a", "b", "c"):
        assert total_cost(subject, forward) == total_cost(subject, backward)


def test_rating_thresholds_for_four_subjects():
    # thresholds at N=4: fully <= 8 < mostly <= 10 < partially <= 12 < no
    assert cost_rating(8, 4) is Level.FULLY
    assert cost_rating(9, 4) is Level.MOSTLY
    assert cost_rating(10, 4) is Level.MOSTLY
    assert cost_rating(11, 4) is Level.PARTIALLY
    assert cost_rating(12, 4) is Level.PARTIALLY
    assert cost_rating(13, 4) is Level.NO
    assert cost_rating(4, 4) is Level.FULLY
    assert cost_rating(0, 1) is Level.FULLY


def test_rating_monotone_non_increasing_in_total():
    for n in (1, 2, 4, 7):
        ratings = [cost_rating(total, n) for total in range(0, 4 * n + 2)]
        assert all(b <= a for a, b in zip(ratings, ratings[1:]))


def test_rating_input_validation():
    with pytest.raises(ValueError):
        cost_rating(3, 0)
    with pytest.raises(ValueError):
        cost_rating(-1, 4)


def test_bundled_ratings_match_matrix_derivation(dataset):
    """The transferability rating cells stored in the dataset agree with the
    ratings derived from the matrix totals."""
    matrix = dataset.transition_costs
    expected = {"cpp": "fully", "java": "fully", "python": "mostly", "csharp": "fully"}
    for subject, token in expected.items():
        assert subject_rating(subject, matrix).token == token
        cell = dataset.cell(subject, "transferability", "transition-cost-rating")
        assert cell.value.token == token


def test_single_subject_universe_zero_total():
    matrix = TransitionCostMatrix(costs={})
    assert total_cost("only", matrix) == 0


def test_derive_cost_vector_rules():
    static_strong_pure = Subject(
        id="a", name="A", attributes=SubjectAttributes("pure-oo", "static", "strong")
    )
    dynamic_weak_multi = Subject(
        id="b", name="B", attributes=SubjectAttributes("multi", "dynamic", "weak")
    )
    assert derive_cost_vector(static_strong_pure, dynamic_weak_multi).components == (1, 1, 1)
    assert derive_cost_vector(static_strong_pure, static_strong_pure).components == (0, 0, 0)
    # reverse direction: dynamic->static and weak->strong cost nothing
    assert derive_cost_vector(dynamic_weak_multi, static_strong_pure).components == (1, 0, 0)


def test_derive_matches_identical_attribute_pairs(dataset):
    java, csharp = dataset.subject("java"), dataset.subject("csharp")
    assert derive_cost_vector(java, csharp).components == (0, 0, 0)
    assert pair_cost("java", "csharp", dataset.transition_costs).components == (0, 0, 0)


def test_derive_does_not_reproduce_every_matrix_cell(dataset):
    """The stored matrix carries a paradigm unit between two multiparadigm
    subjects; the attribute rules cannot produce it. The matrix is data."""
    cpp, python = dataset.subject("cpp"), dataset.subject("python")
    derived = derive_cost_vector(cpp, python)
    stored = pair_cost("cpp", "python", dataset.transition_costs)
    assert derived.components == (0, 1, 0)
    assert stored.components == (1, 1, 1)
    assert derived.components != stored.components


def test_derive_requires_attributes():
    bare = Subject(id="x", name="X")
    other = Subject(id="y", name="Y", attributes=SubjectAttributes("multi", "static", "strong"))
    with pytest.raises(MissingAttributesError):
        derive_cost_vector(bare, other)


def test_cost_vector_components_are_binary():
    with pytest.raises(ValueError):
        CostVector(2, 0, 0)
    with pytest.raises(ValueError):
        TransitionCostMatrix(costs={("a", "a"): CostVector(0, 0, 0)})
