import pytest

from langscore import DEFAULT_SCALE, Level, RatingScale, list_levels, map_level, parse_level


def test_default_mapping_is_exact():
    assert map_level(Level.FULLY) == 1.0
    assert map_level(Level.MOSTLY) == 0.70
    assert map_level(Level.PARTIALLY) == 0.40
    assert map_level(Level.NO) == 0.0


def test_levels_are_totally_ordered():
    assert Level.NO < Level.PARTIALLY < Level.MOSTLY < Level.FULLY
    assert len(Level) == 4


def test_list_levels_ascending():
    assert list_levels(DEFAULT_SCALE) == [
        (Level.NO, 0.0),
        (Level.PARTIALLY, 0.40),
        (Level.MOSTLY, 0.70),
        (Level.FULLY, 1.0),
    ]


def test_custom_scale_round_trips():
    scale = RatingScale(
        scores={Level.NO: 0.0, Level.PARTIALLY: 0.25, Level.MOSTLY: 0.5, Level.FULLY: 1.0}
    )
    assert [s for _, s in list_levels(scale)] == [0.0, 0.25, 0.5, 1.0]
    assert RatingScale.from_json(scale.to_json()) == scale


def test_non_monotone_scale_rejected_at_construction():
    with pytest.raises(ValueError, match="strictly increasing"):
        RatingScale(scores={Level.NO: 0.0, Level.PARTIALLY: 0.5, Level.MOSTLY: 0.4, Level.FULLY: 1.0})


def test_scale_anchors_required():
    with pytest.raises(ValueError, match="anchor"):
        RatingScale(scores={Level.NO: 0.1, Level.PARTIALLY: 0.4, Level.MOSTLY: 0.7, Level.FULLY: 1.0})
    with pytest.raises(ValueError, match="four levels"):
        RatingScale(scores={Level.NO: 0.0, Level.FULLY: 1.0})


@pytest.mark.parametrize(
    "text,expected",
    [
        ("fully", Level.FULLY),
        ("Full", Level.FULLY),
        ("Fully supported", Level.FULLY),
        ("MOSTLY", Level.MOSTLY),
        ("mostly supported", Level.MOSTLY),
        ("partial", Level.PARTIALLY),
        ("Partially supported", Level.PARTIALLY),
        ("no", Level.NO),
        ("Not supported", Level.NO),
    ],
)
def test_alias_canonicalization(text, expected):
    assert parse_level(text) is expected


def test_unknown_level_rejected():
    with pytest.raises(ValueError, match="unknown qualitative level"):
        parse_level("kinda")
