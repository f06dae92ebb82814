"""PMI on a corpus where coda and onset never influence each other.

Coda and onset categories are drawn independently, so every PMI should sit
near zero and the PMI-by-slope trend should be flat.
"""

from sylcontact import (
    Granularity,
    build_contact_table,
    default_inventory,
    fit_trend,
    generate_corpus,
    pmi_by_slope,
    pmi_matrix,
)

inv = default_inventory()
entries = generate_corpus(inv, n=100_000, seed=0)
table = build_contact_table(entries, inv)

# --- Category-level PMI matrix (rows: coda, columns: onset) ---
matrix = pmi_matrix(table, Granularity.CATEGORY)
cats = sorted({x for x, _ in matrix}, reverse=True)
print("coda\\onset " + " ".join(f"{c.abbrev:>7}" for c in cats))
for x in cats:
    print(f"{x.abbrev:>10} " + " ".join(f"{matrix[x, y].value:+7.3f}" for y in cats))

# --- Mean PMI per sonority slope, and a weighted trend through it ---
by_slope = pmi_by_slope(table)
for s, v in by_slope.items():
    print(f"slope {s:+d}: mean PMI {v.mean_pmi:+.4f} over {v.weight} contacts")
trend = fit_trend([(s, v.mean_pmi, v.weight) for s, v in by_slope.items()])
print(f"trend: {trend.slope:+.2e} per slope step, intercept {trend.intercept:+.2e}")
