"""Syllabify a small lexicon and look at its syllable contacts.

Run with ``python demos/01_syllabify_and_contacts.py``.
"""

from sylcontact import (
    Position,
    build_contact_table,
    bundled_lexicon,
    default_inventory,
    extract_contacts,
    parse_word,
    positional_distribution,
    slope_histogram,
)

inv = default_inventory()
print(f"inventory {inv.name!r}: {len(inv.consonants)} consonants, {len(inv.vowels)} vowels")

# --- One word at a time ---
# Affricates are single phonemes, so /dʒ/ in dʒæmʃid is one onset.
word = parse_word(inv, "dʒæmʃid")
(pair,) = extract_contacts(word)
print(word, word.shape, f"contact {pair} slope {pair.slope:+d}")

# The grammar allows one onset consonant and up to two coda consonants,
# so longer strings still have exactly one parse.
print(parse_word(inv, "tastkabærdi"), "<- coda /st/, onset /k/")

# --- A whole lexicon ---
entries = bundled_lexicon("table5")
table = build_contact_table(entries, inv)
print(f"\n{table.total()} CVC.CVC words, {len(table)} distinct contact pairs")

hist = slope_histogram(table)
for slope, count in hist.items():
    print(f"  slope {slope:+d}: {'#' * count}")

coda = positional_distribution(table, Position.CODA)
onset = positional_distribution(table, Position.ONSET)
print("\ncategory  coda   onset")
for cat in sorted(coda, reverse=True):
    print(f"  {cat.abbrev}      {coda[cat]:.2f}   {onset[cat]:.2f}")
