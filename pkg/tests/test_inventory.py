import itertools
import json

import pytest

from sylcontact import (
    InventoryError,
    PhonemeClass,
    SonorityCategory,
    classify,
    default_inventory,
    load_inventory,
    sonority_of,
)

TABLE4 = {
    "LI": ["y", "r", "l"],
    "NA": ["m", "n"],
    "FR": ["v", "z", "ʒ", "f", "s", "ʃ", "h", "x"],
    "AF": ["tʃ", "dʒ"],
    "PL": ["b", "d", "g", "q", "ʔ", "p", "t", "k"],
}


def test_category_levels_are_the_five_step_scale():
    assert [c.level for c in SonorityCategory] == [1, 2, 3, 4, 5]
    assert [c.abbrev for c in sorted(SonorityCategory, reverse=True)] == ["LI", "NA", "FR", "AF", "PL"]
    assert SonorityCategory.STOP < SonorityCategory.AFFRICATE < SonorityCategory.FRICATIVE
    assert SonorityCategory.FRICATIVE < SonorityCategory.NASAL < SonorityCategory.LIQUID


@pytest.mark.parametrize("name,expected", [
    ("Stop", SonorityCategory.STOP), ("liquid", SonorityCategory.LIQUID),
    ("NA", SonorityCategory.NASAL), ("pl", SonorityCategory.STOP),
])
def test_category_parse(name, expected):
    assert SonorityCategory.parse(name) is expected


def test_default_inventory_matches_consonant_table():
    inv = default_inventory()
    for abbrev, symbols in TABLE4.items():
        cat = SonorityCategory.parse(abbrev)
        assert [p.symbol for p in inv.members(cat)] == symbols
    # The listed consonants number 23 (the nasal row lists two).
    assert len(inv.consonants) == 23
    assert [v.symbol for v in inv.vowels] == ["i", "e", "æ", "a", "o", "u"]


@pytest.mark.parametrize("symbol,level", [("l", 5), ("t", 1), ("m", 4), ("ʃ", 3), ("tʃ", 2), ("dʒ", 2), ("ʔ", 1)])
def test_sonority_of(symbol, level):
    assert sonority_of(default_inventory(), symbol) == level


def test_sonority_of_rejects_vowels_and_unknowns():
    inv = default_inventory()
    with pytest.raises(InventoryError, match="vowel"):
        sonority_of(inv, "a")
    with pytest.raises(InventoryError, match="unknown"):
        sonority_of(inv, "Q")


def test_classify():
    inv = default_inventory()
    assert classify(inv, "m") is PhonemeClass.CONSONANT
    assert classify(inv, "æ") is PhonemeClass.VOWEL
    with pytest.raises(InventoryError):
        classify(inv, "Q")


def test_pairwise_slopes_stay_within_four():
    inv = default_inventory()
    for a, b in itertools.product(inv.consonants, repeat=2):
        assert -4 <= sonority_of(inv, a.symbol) - sonority_of(inv, b.symbol) <= 4


def test_minimal_inventory():
    inv = load_inventory({"name": "toy", "phonemes": [
        {"symbol": "a", "class": "vowel"}, {"symbol": "t", "class": "consonant", "category": "Stop"}]})
    assert len(inv) == 2 and inv.name == "toy"


@pytest.mark.parametrize("phonemes,match", [
    ([{"symbol": "a", "class": "vowel"}, {"symbol": "t", "class": "consonant", "category": "Stop"},
      {"symbol": "t", "class": "consonant", "category": "Stop"}], "duplicate"),
    ([{"symbol": "a", "class": "vowel"}, {"symbol": "t", "class": "consonant", "category": "Glide"}], "unknown sonority"),
    ([{"symbol": "a", "class": "vowel"}, {"symbol": "t", "class": "consonant"}], "no sonority category"),
    ([{"symbol": "a", "class": "vowel", "category": "Liquid"}, {"symbol": "t", "class": "consonant", "category": "Stop"}],
     "must not carry"),
    ([], "no phonemes"),
    ([{"symbol": "a", "class": "vowel"}], "consonant"),
    ([{"symbol": "t", "class": "consonant", "category": "Stop"}], "vowel"),
])
def test_invalid_documents(phonemes, match):
    with pytest.raises(InventoryError, match=match):
        load_inventory({"name": "bad", "phonemes": phonemes})


def test_load_is_deterministic_and_round_trips():
    inv = default_inventory()
    text = json.dumps(inv.to_document(), ensure_ascii=False)
    assert load_inventory(text) == load_inventory(text) == inv


def test_malformed_json():
    with pytest.raises(InventoryError, match="JSON"):
        load_inventory("{not json")
