"""Repairing contacts with a steep sonority rise."""

from sylcontact import RepairStrategy, apply_repair, default_inventory, parse_word, suggest_repairs

inv = default_inventory()

# --- Single repairs ---
for text, strategy in [
    ("zud.ræs", RepairStrategy.assimilation()),
    ("keb.rit", RepairStrategy.metathesis()),
    ("dad.yar", RepairStrategy.epenthesis("e")),
    ("ʔeʔ.lam", RepairStrategy.omission("coda")),
]:
    print(f"{text:10} {apply_repair(inv, parse_word(inv, text), 0, strategy)}")

# --- Ranked suggestions ---
# Contacts that disappear (new slope "none") rank first, then lower slopes.
word = parse_word(inv, "tæd.ris")
for max_slope in (0, -4):
    print(f"\n{word}, max slope {max_slope:+d}:")
    for outcome in suggest_repairs(inv, word, max_slope):
        print("  ", outcome)
