"""Falling slopes can dominate without any coda/onset interaction.

Sonorants are made likelier in coda and obstruents likelier in onset, but
the two positions are still drawn independently. The slope histogram then
leans towards falling sonority while PMI stays flat.
"""

from sylcontact import (
    Position,
    build_contact_table,
    bundled_weights,
    default_inventory,
    fit_trend,
    generate_corpus,
    pmi_matrix,
    positional_distribution,
    slope_histogram,
)

inv = default_inventory()
weights = bundled_weights("skewed_weights")
print(weights)

table = build_contact_table(generate_corpus(inv, n=300_000, seed=0, weights=weights), inv)

hist = slope_histogram(table)
peak = max(hist.values())
for s, n in hist.items():
    print(f"slope {s:+d} {n:7d} {'#' * round(40 * n / peak)}")
trend = fit_trend([(s, n, 1.0) for s, n in hist.items()])
print(f"histogram trend: {trend.slope:+.1f} words per slope step")

coda = positional_distribution(table, Position.CODA)
onset = positional_distribution(table, Position.ONSET)
for cat in sorted(coda, reverse=True):
    print(f"{cat.abbrev}: coda {coda[cat]:.3f}  onset {onset[cat]:.3f}")

worst = max(abs(r.value) for r in pmi_matrix(table).values())
print(f"largest |PMI| between coda and onset category: {worst:.4f}")
