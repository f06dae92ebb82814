import pytest

from sylcontact import build_contact_table, bundled_lexicon, default_inventory

# (transcription, coda category, onset category, slope), copied row by row
# from the published sample of attested category combinations.
TABLE5_GOLDEN = [
    ("del.dar", "LI", "PL", -4),
    ("dir.dʒuʃ", "LI", "AF", -3),
    ("lom.ban", "NA", "PL", -3),
    ("por.sud", "LI", "FR", -2),
    ("pæn.tʃær", "NA", "AF", -2),
    ("pus.tin", "FR", "PL", -2),
    ("mur.mur", "LI", "NA", -1),
    ("dʒæm.ʃid", "NA", "FR", -1),
    ("tah.tʃin", "FR", "AF", -1),
    ("gætʃ.bor", "AF", "PL", -1),
    ("gol.riz", "LI", "LI", 0),
    ("sædʒ.dʒad", "AF", "AF", 0),
    ("ʔæf.ʃin", "FR", "FR", 0),
    ("bim.nak", "NA", "NA", 0),
    ("did.gah", "PL", "PL", 0),
    ("gav.miʃ", "FR", "NA", 1),
    ("hæm.rah", "NA", "LI", 1),
    ("mædʒ.zur", "AF", "FR", 1),
    ("zud.dʒuʃ", "PL", "AF", 1),
    ("riʃ.riʃ", "FR", "LI", 2),
    ("ʔatʃ.mæz", "AF", "NA", 2),
    ("lot.fæn", "PL", "FR", 2),
    ("dʒadʒ.rud", "AF", "LI", 3),
    ("nik.nam", "PL", "NA", 3),
    ("tædris", "PL", "LI", 4),
]


@pytest.fixture(scope="session")
def inv():
    return default_inventory()


@pytest.fixture(scope="session")
def table5_entries():
    return bundled_lexicon("table5")


@pytest.fixture(scope="session")
def table5(inv, table5_entries):
    return build_contact_table(table5_entries, inv)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = getattr(config, "_acceptance_results", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok, detail in sorted(results):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}"
        terminalreporter.write_line(line + (f" ({detail})" if detail else ""))
