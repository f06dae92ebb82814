"""Assemble the slope/positional/PMI tables for a lexicon and write them to disk.

All numbers come straight from :mod:`sylcontact.stats`; this module only
arranges and formats them. Reals are written with six decimals and rows in
a fixed order so repeated runs produce byte-identical files.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .errors import EmptyTableError
from .inventory import Inventory, SonorityCategory
from .lexicon import LexicalEntry
from .stats import (
    SLOPES,
    ContactTable,
    Granularity,
    PmiResult,
    Position,
    Reject,
    SlopePmi,
    TrendLine,
    Weighting,
    build_contact_table,
    fit_trend,
    pmi_by_slope,
    pmi_matrix,
    positional_distribution,
    slope_histogram,
)

__all__ = ["ReportBundle", "build_report", "write_report", "fmt_real"]


def fmt_real(x: float | None) -> str:
    if x is None or x != x:
        return ""
    s = f"{x:.6f}"
    return "0.000000" if s == "-0.000000" else s


@dataclass
class WeightedReport:
    weighting: Weighting
    histogram: dict[int, int]
    positional: dict[str, dict[SonorityCategory, float]]
    pmi_matrix: dict[tuple, PmiResult]
    pmi_by_slope: dict[int, SlopePmi]
    histogram_trend: TrendLine | None
    pmi_trend: TrendLine | None

    @property
    def undefined_pmi_cells(self) -> int:
        return sum(1 for r in self.pmi_matrix.values() if not r.defined)


@dataclass
class ReportBundle:
    table: ContactTable
    input_rows: int
    by_weighting: dict[Weighting, WeightedReport] = field(default_factory=dict)

    @property
    def rejects(self) -> list[Reject]:
        return self.table.rejects

    @property
    def analyzed_rows(self) -> int:
        return self.input_rows - len(self.rejects)

    def summary(self) -> dict:
        reasons: dict[str, int] = {}
        for r in self.rejects:
            key = r.reason.split(":")[0] if ":" in r.reason else "shape"
            reasons[key] = reasons.get(key, 0) + 1
        out = {
            "input_rows": self.input_rows,
            "analyzed_rows": self.analyzed_rows,
            "rejected_rows": len(self.rejects),
            "rejects_by_reason": reasons,
            "boundary_hint_mismatches": len(self.table.hint_mismatches),
            "inventory": self.table.inventory.name,
            "weightings": {},
        }
        for w, rep in self.by_weighting.items():
            out["weightings"][w.value] = {
                "total": self.table.total(w),
                "histogram_trend": _trend_json(rep.histogram_trend),
                "pmi_trend": _trend_json(rep.pmi_trend),
                "undefined_pmi_cells": rep.undefined_pmi_cells,
                "pmi_cells": len(rep.pmi_matrix),
            }
        return out


def _trend_json(t: TrendLine | None):
    if t is None:
        return None
    return {"slope": round(t.slope, 6), "intercept": round(t.intercept, 6)}


def _weighted(table: ContactTable, w: Weighting) -> WeightedReport:
    hist = slope_histogram(table, w)
    positional = {p.value: positional_distribution(table, p, w) for p in Position}
    matrix = pmi_matrix(table, Granularity.CATEGORY, w)
    by_slope = pmi_by_slope(table, w)
    hist_trend = fit_trend([(s, hist[s], 1.0) for s in SLOPES])
    pts = [(s, v.mean_pmi, v.weight) for s, v in by_slope.items()]
    try:
        pmi_trend = fit_trend(pts) if pts else None
    except ValueError:
        pmi_trend = None
    return WeightedReport(w, hist, positional, matrix, by_slope, hist_trend, pmi_trend)


def build_report(
    entries: Sequence[LexicalEntry], inv: Inventory, weightings: Iterable[Weighting] = tuple(Weighting)
) -> ReportBundle:
    """Run the whole analysis; raises :class:`EmptyTableError` if no CVC.CVC word survives."""
    table = build_contact_table(entries, inv)
    bundle = ReportBundle(table, len(entries))
    if table.total(Weighting.TYPE) == 0:
        raise EmptyTableError(
            f"no analyzable CVC.CVC words: {len(entries)} rows read, {len(table.rejects)} rejected"
        )
    for w in weightings:
        if table.total(w) == 0:
            raise EmptyTableError(f"all {w.value} counts are zero")
        bundle.by_weighting[Weighting(w)] = _weighted(table, Weighting(w))
    return bundle


def _write_csv(path: Path, header: Sequence[str], rows: Iterable[Sequence]) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


def write_report(bundle: ReportBundle, out_dir: str | Path) -> list[Path]:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []

    def emit(name, header, rows):
        path = out / name
        _write_csv(path, header, rows)
        written.append(path)

    for w, rep in bundle.by_weighting.items():
        emit(f"slope_histogram_{w.value}.csv", ["slope", "count"], [(s, rep.histogram[s]) for s in SLOPES])
        emit(
            f"positional_{w.value}.csv",
            ["category", "level", "coda", "onset"],
            [
                (c.abbrev, c.level, fmt_real(rep.positional["coda"][c]), fmt_real(rep.positional["onset"][c]))
                for c in sorted(SonorityCategory, reverse=True)
            ],
        )
        emit(
            f"pmi_matrix_{w.value}.csv",
            ["coda", "onset", "slope", "joint", "pmi", "defined"],
            [
                (x.abbrev, y.abbrev, y.level - x.level, r.joint, fmt_real(r.value), int(r.defined))
                for (x, y), r in sorted(rep.pmi_matrix.items(), key=lambda kv: (-kv[0][0], -kv[0][1]))
            ],
        )
    emit(
        "pmi_by_slope.csv",
        ["weighting", "slope", "mean_pmi", "weight", "pairs", "skipped"],
        [
            (w.value, s, fmt_real(v.mean_pmi), v.weight, v.pairs, v.skipped)
            for w, rep in bundle.by_weighting.items()
            for s, v in rep.pmi_by_slope.items()
        ],
    )
    emit(
        "rejects.csv",
        ["row", "orthography", "transcription", "reason"],
        [(r.row, r.entry.orthography, r.entry.transcription, r.reason) for r in bundle.rejects],
    )
    summary = out / "summary.json"
    summary.write_text(json.dumps(bundle.summary(), ensure_ascii=False, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    written.append(summary)
    return written
