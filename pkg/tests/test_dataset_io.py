import json

import pytest

from langscore import (
    DuplicateIdError,
    ParseError,
    UnresolvedReferenceError,
    dumps_dataset,
    load_bundled_dataset,
    load_dataset,
    loads_dataset,
    save_dataset,
    validate_dataset,
)


def test_bundled_dataset_shape(dataset):
    assert len(dataset.subjects) == 4
    assert dataset.framework.n == 9
    assert len(dataset.framework.technical) == 5
    assert len(dataset.framework.environmental) == 4
    assert dataset.profile().weights == {p.id: 1.0 for p in dataset.framework.parameters}


def test_round_trip_is_structurally_identical(dataset, tmp_path):
    path = tmp_path / "copy.json"
    save_dataset(dataset, path)
    again = load_dataset(path)
    assert again.to_json() == dataset.to_json()
    assert again.canonical_json() == dataset.canonical_json()
    # provenance survives
    assert [r.provenance for r in again.ratings] == [r.provenance for r in dataset.ratings]
    # and a second round trip is byte-stable
    assert dumps_dataset(again) == dumps_dataset(dataset)


def _doc(dataset):
    return json.loads(dumps_dataset(dataset))


def test_parse_error_carries_location(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"framework": ', encoding="utf-8")
    with pytest.raises(ParseError) as err:
        load_dataset(path)
    assert "broken.json:1" in str(err.value)


def test_unknown_top_level_field_rejected(dataset):
    doc = _doc(dataset)
    doc["surprise"] = 1
    with pytest.raises(ParseError, match="unknown fields.*surprise"):
        loads_dataset(json.dumps(doc))


def test_unknown_nested_field_rejected(dataset):
    doc = _doc(dataset)
    doc["ratings"][0]["comment"] = "nope"
    with pytest.raises(ParseError, match="unknown fields.*comment"):
        loads_dataset(json.dumps(doc))


def test_dangling_subject_reference_is_an_error(dataset):
    doc = _doc(dataset)
    doc["ratings"][0]["subject"] = "fortran"
    with pytest.raises(UnresolvedReferenceError, match="fortran"):
        loads_dataset(json.dumps(doc))


def test_dangling_parameter_and_sub_references(dataset):
    doc = _doc(dataset)
    doc["ratings"][0]["parameter"] = "telepathy"
    with pytest.raises(UnresolvedReferenceError, match="telepathy"):
        loads_dataset(json.dumps(doc))
    doc = _doc(dataset)
    doc["ratings"][0]["sub_parameter"] = "vibes"
    with pytest.raises(UnresolvedReferenceError, match="vibes"):
        loads_dataset(json.dumps(doc))


def test_duplicate_subject_id_is_an_error(dataset):
    doc = _doc(dataset)
    doc["subjects"].append(dict(doc["subjects"][0]))
    with pytest.raises(DuplicateIdError):
        loads_dataset(json.dumps(doc))


def test_duplicate_parameter_id_is_an_error(dataset):
    doc = _doc(dataset)
    doc["framework"]["parameters"].append(dict(doc["framework"]["parameters"][0]))
    with pytest.raises(ParseError, match="duplicate parameter ids"):
        loads_dataset(json.dumps(doc))


def test_empty_parameter_list_rejected(dataset):
    doc = _doc(dataset)
    doc["framework"]["parameters"] = []
    doc["ratings"] = []
    doc["weight_profiles"] = [{"name": "default", "weights": {}}]
    doc["demand"] = None
    with pytest.raises(ParseError, match="framework must contain >=1 parameter"):
        loads_dataset(json.dumps(doc))


def test_level_aliases_canonicalized_on_load(dataset):
    doc = _doc(dataset)
    cell = doc["ratings"][0]
    assert cell["value"] == "fully"
    cell["value"] = "Fully supported"
    again = loads_dataset(json.dumps(doc))
    assert again.ratings[0].value.token == "fully"
    # canonical save writes the token, not the alias
    assert json.loads(dumps_dataset(again))["ratings"][0]["value"] == "fully"


def test_direct_score_out_of_range_rejected(dataset):
    doc = _doc(dataset)
    for cell in doc["ratings"]:
        if cell["parameter"] == "foolproof-ide":
            cell["value"] = 1.5
            break
    with pytest.raises(ParseError, match=r"\[0,1\]"):
        loads_dataset(json.dumps(doc))


def test_demand_entry_must_reference_known_subject(dataset):
    doc = _doc(dataset)
    doc["demand"]["entries"][0]["subject"] = "cobol"
    with pytest.raises(UnresolvedReferenceError, match="cobol"):
        loads_dataset(json.dumps(doc))


def test_transition_pair_must_reference_known_subjects(dataset):
    doc = _doc(dataset)
    doc["transition_costs"][0]["from"] = "ada"
    with pytest.raises(UnresolvedReferenceError, match="ada"):
        loads_dataset(json.dumps(doc))


def test_dataset_without_demand_or_matrix_loads(dataset):
    doc = _doc(dataset)
    doc["demand"] = None
    doc["transition_costs"] = None
    # drop the quantitative parameter so validation still passes
    doc["framework"]["parameters"] = [
        p for p in doc["framework"]["parameters"] if p["id"] != "industry-demand"
    ]
    doc["weight_profiles"][0]["weights"].pop("industry-demand")
    again = loads_dataset(json.dumps(doc))
    assert again.demand is None and again.transition_costs is None
    assert validate_dataset(again).ok


def test_bundled_loader_is_cached_free_and_fresh():
    a = load_bundled_dataset()
    b = load_bundled_dataset()
    assert a is not b and a.to_json() == b.to_json()


def test_random_datasets_round_trip():
    """load(save(d)) is structurally identical for arbitrary valid datasets,
    not just the bundled one."""
    import random

    from tests.conftest import random_dataset

    for seed in range(40):
        generated = random_dataset(random.Random(900 + seed))
        again = loads_dataset(dumps_dataset(generated), name=generated.name)
        assert again.to_json() == generated.to_json(), seed
        assert [r.provenance for r in again.ratings] == [
            r.provenance for r in generated.ratings
        ]
