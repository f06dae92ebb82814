import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sylcontact import (
    RepairError,
    RepairKind,
    RepairStrategy,
    apply_repair,
    default_inventory,
    extract_contacts,
    parse_word,
    suggest_repairs,
    syllabify,
)

INV = default_inventory()


def repair(transcription, strategy, boundary=0):
    return apply_repair(INV, parse_word(INV, transcription), boundary, strategy)


def test_assimilation_golden():
    out = repair("zud.ræs", RepairStrategy.assimilation())
    assert str(out.surface) == "zur.ræs"
    assert (out.old_slope, out.new_slope) == (4, 0)


def test_metathesis_golden():
    out = repair("keb.rit", RepairStrategy.metathesis())
    assert str(out.surface) == "ker.bit"
    assert (out.old_slope, out.new_slope) == (4, -4)


def test_epenthesis_dissolves_contact():
    out = repair("dad.yar", RepairStrategy.epenthesis("e"))
    assert str(out.surface) == "da.de.yar"
    assert out.old_slope == 4 and out.new_slope is None


def test_omission_of_coda_dissolves_contact():
    out = repair("ʔeʔ.lam", RepairStrategy.omission("coda"))
    assert str(out.surface) == "ʔe.lam" and out.new_slope is None


def test_progressive_assimilation():
    out = repair("zud.ræs", RepairStrategy.assimilation("progressive"))
    assert str(out.surface) == "zud.dæs" and out.new_slope == 0


def test_omission_in_complex_coda_keeps_a_contact():
    out = repair("tast.ka", RepairStrategy.omission("onset"))
    assert str(out.surface) == "tas.ta" and out.new_slope == -2


@pytest.mark.parametrize("transcription,boundary,strategy,match", [
    ("da.de.yar", 0, RepairStrategy.metathesis(), "no consonant contact"),
    ("zud.ræs", 1, RepairStrategy.metathesis(), "out of range"),
    ("zud.ræs", 0, RepairStrategy(RepairKind.EPENTHESIS, vowel="t"), "consonant"),
    ("zud.ræs", 0, RepairStrategy(RepairKind.EPENTHESIS, vowel="Q"), "unknown"),
])
def test_apply_repair_errors(transcription, boundary, strategy, match):
    with pytest.raises(RepairError, match=match):
        repair(transcription, strategy, boundary)


def test_strategy_validation():
    with pytest.raises(RepairError):
        RepairStrategy.omission("nucleus")
    with pytest.raises(RepairError):
        RepairStrategy(RepairKind.EPENTHESIS)


def test_suggestions_for_tædris():
    # Hand enumeration at tæd|ris, slope +4, max 0:
    #   omission(coda) tæ.ris none; omission(onset) tæ.dis none;
    #   assimilation tær.ris 0; metathesis tær.dis -4; epenthesis x6 none.
    got = suggest_repairs(INV, parse_word(INV, "tæd.ris"), 0)
    table = [(str(o.strategy), str(o.surface), o.new_slope) for o in got]
    assert table == [
        ("omission(coda)", "tæ.ris", None),
        ("omission(onset)", "tæ.dis", None),
        *((f"epenthesis({v})", f"tæ.d{v}.ris", None) for v in ["i", "e", "æ", "a", "o", "u"]),
        ("metathesis", "tær.dis", -4),
        ("assimilation(regressive)", "tær.ris", 0),
    ]


def test_suggestions_for_dadyar_include_every_vowel():
    got = suggest_repairs(INV, parse_word(INV, "dad.yar"), 0)
    epen = [o for o in got if o.strategy.kind is RepairKind.EPENTHESIS]
    assert [o.strategy.vowel for o in epen] == ["i", "e", "æ", "a", "o", "u"]
    assert all(o.new_slope is None for o in epen)


def test_nothing_to_repair():
    with pytest.raises(RepairError, match="nothing to repair"):
        suggest_repairs(INV, parse_word(INV, "gol.riz"), 0)


def test_strict_threshold_leaves_only_metathesis_among_surviving_contacts():
    got = suggest_repairs(INV, parse_word(INV, "tæd.ris"), -4)
    assert [str(o.strategy) for o in got if o.new_slope is not None] == ["metathesis"]


consonants = [p.symbol for p in INV.consonants]
vowels = [p.symbol for p in INV.vowels]
cvc_cvc = st.tuples(*(st.sampled_from(vowels if i in (1, 4) else consonants) for i in range(6)))


@given(cvc_cvc, st.integers(-4, 3))
@settings(max_examples=300, deadline=None)
def test_repair_invariants(seq, max_slope):
    word = syllabify(INV, list(seq))
    (contact,) = extract_contacts(word)
    if contact.slope <= max_slope:
        with pytest.raises(RepairError):
            suggest_repairs(INV, word, max_slope)
        return
    got = suggest_repairs(INV, word, max_slope)
    assert got == suggest_repairs(INV, word, max_slope)
    keys = [(float("-inf") if o.new_slope is None else o.new_slope, o.strategy.kind) for o in got]
    assert keys == sorted(keys)
    for o in got:
        assert o.new_slope is None or o.new_slope < o.old_slope
        assert syllabify(INV, list(o.surface.phonemes)) == o.surface
    for strat in (RepairStrategy.assimilation(), RepairStrategy.metathesis()):
        out = apply_repair(INV, word, 0, strat)
        if strat.kind is RepairKind.ASSIMILATION:
            assert out.new_slope == 0
        else:
            assert out.new_slope == -contact.slope
