import pytest

from langscore import (
    discrepancy_report,
    rank,
    reconstruction_dataset,
    validate_dataset,
    what_if,
    WhatIfRequest,
)

SUBJECTS = ("cpp", "java", "python", "csharp")


def test_report_has_enough_entries(dataset, published):
    report = discrepancy_report(dataset, published)
    assert len(report) >= 4


def test_all_four_abstract_encapsulation_cells_present(dataset, published):
    """The published column sits a uniform +0.07 above recomputation."""
    report = discrepancy_report(dataset, published)
    for subject in SUBJECTS:
        entry = report.find(subject, "abstract-encapsulation")
        assert entry is not None, subject
        assert entry.delta == pytest.approx(0.07, abs=1e-9)


def test_naming_encapsulation_column_is_irreproducible(dataset, published):
    report = discrepancy_report(dataset, published)
    deltas = {s: report.find(s, "naming-encapsulation").delta for s in SUBJECTS}
    assert all(abs(d) > 0.005 for d in deltas.values())
    # not a uniform offset: this column cannot be fixed by any single shift
    assert max(deltas.values()) - min(deltas.values()) > 0.005


def test_relationships_only_cpp_disagrees(dataset, published):
    report = discrepancy_report(dataset, published)
    entry = report.find("cpp", "object-relationships")
    assert entry is not None
    assert entry.published == pytest.approx(0.58)
    assert entry.recomputed == pytest.approx((0.7 + 0 + 1 + 1 + 0.4 + 0.7) / 6, abs=1e-12)
    for subject in ("java", "python", "csharp"):
        assert report.find(subject, "object-relationships") is None


def test_demand_csharp_cell_is_flagged(dataset, published):
    """Published 0.46 vs recomputed 0.4696: beyond the 0.005 threshold."""
    report = discrepancy_report(dataset, published)
    entry = report.find("csharp", "industry-demand")
    assert entry is not None
    assert entry.published == 0.46
    assert entry.recomputed == pytest.approx(
        (8.21 / 14.51 + 56062 / 222852 + 304892 / 515428) / 3, abs=1e-12
    )
    for subject in ("cpp", "java", "python"):
        assert report.find(subject, "industry-demand") is None


def test_contemporary_features_python_gap(dataset, published):
    report = discrepancy_report(dataset, published)
    entry = report.find("python", "contemporary-features")
    assert entry is not None
    assert entry.published == pytest.approx(0.46)
    assert entry.recomputed == pytest.approx((0 + 0.4 + 0.4) / 3, abs=1e-12)


def test_reconstructed_and_inferred_cells_are_not_compared(dataset, published):
    report = discrepancy_report(dataset, published)
    for subject in SUBJECTS:
        assert report.find(subject, "polymorphism") is None
        assert report.find(subject, "transferability") is None
        assert report.find(subject, "foolproof-ide") is None


def test_overall_totals_flagged_with_explanation(dataset, published):
    report = discrepancy_report(dataset, published)
    ls_entries = [e for e in report.entries if e.source == "overall-scores" and e.measure == "ls"]
    assert {e.subject for e in ls_entries} == set(SUBJECTS)
    for entry in ls_entries:
        assert "published per-parameter values" in entry.note


def test_reweighted_divisor_ambiguity_emitted(dataset, published):
    report = discrepancy_report(dataset, published)
    bounded = [
        e
        for e in report.entries
        if e.source == "reweighted-scores" and e.measure == "ls_bounded"
    ]
    assert bounded, "divisor ambiguity must appear in the report"
    for entry in bounded:
        assert "11" in entry.note and "6" in entry.note


def test_threshold_is_strict(dataset, published):
    report = discrepancy_report(dataset, published)
    for entry in report.entries:
        assert abs(entry.delta) > report.threshold


def test_report_json_shape(dataset, published):
    doc = discrepancy_report(dataset, published).to_json()
    assert doc["threshold"] == 0.005
    entry = doc["entries"][0]
    assert set(entry) == {
        "location",
        "source",
        "subject",
        "measure",
        "published",
        "recomputed",
        "delta",
        "note",
    }


# ---------------------------------------------------------------------------
# Reconstruction dataset


def test_reconstruction_scores_published_totals(dataset, published):
    recon = reconstruction_dataset(dataset, published)
    assert validate_dataset(recon).ok
    cards = {c.subject: c for c in rank(recon, recon.profile())}
    # the two sums that close exactly
    assert cards["csharp"].ls == pytest.approx(6.94, abs=1e-9)
    assert cards["cpp"].ls == pytest.approx(5.75, abs=1e-9)
    # and the two the source itself cannot reproduce exactly
    assert cards["java"].ls == pytest.approx(6.53, abs=1e-9)
    assert cards["python"].ls == pytest.approx(4.31, abs=1e-9)


def test_reconstruction_technical_sum_example(dataset, published):
    recon = reconstruction_dataset(dataset, published)
    card = {c.subject: c for c in rank(recon, recon.profile())}["csharp"]
    # 0.92 + 0.37 + 1 + 0.4 + 0.94
    assert card.ls_tech == pytest.approx(3.63, abs=1e-9)


def test_reconstruction_preserves_provenance_mapping(dataset, published):
    recon = reconstruction_dataset(dataset, published)
    assert recon.cell("csharp", "abstract-encapsulation", None).provenance == "paper"
    assert recon.cell("csharp", "polymorphism", None).provenance == "editorial"
    assert recon.cell("csharp", "foolproof-ide", None).provenance == "inferred"


def test_reconstruction_reweighted_matches_published_exactly(dataset, published):
    recon = reconstruction_dataset(dataset, published)
    result = what_if(
        recon, WhatIfRequest(weights={"industry-demand": 3.0}, category="environmental-only")
    )
    expected = {row.subject: row.ls for row in published.reweighted.rows}
    assert result.ranking == ("java", "python", "csharp", "cpp")
    for card in result.scorecards:
        assert card.ls == pytest.approx(expected[card.subject], abs=1e-9)
