"""Co-occurrence tables over syllable contacts and the measures built on them.

A :class:`ContactTable` counts (coda consonant, onset consonant) events from
CVC.CVC words, once per lexeme (type weighting) and ``token_freq`` times per
lexeme (token weighting). Everything else here is a read-only query on a
table: slope histograms, positional category distributions, pointwise
mutual information and its per-slope aggregate, and a weighted trend line.

Probabilities are raw maximum-likelihood estimates; no smoothing.
"""

from __future__ import annotations

import enum
import math
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence, Union

import numpy as np

from .errors import (
    EmptyTableError,
    SylContactError,
    TokenizationError,
    TrendFitError,
    UndefinedEventError,
)
from .inventory import Inventory, SonorityCategory
from .lexicon import LexicalEntry
from .syllabifier import _parse, extract_contacts, shape_of

__all__ = [
    "Weighting",
    "Position",
    "Granularity",
    "Reject",
    "ContactTable",
    "PmiResult",
    "SlopePmi",
    "TrendLine",
    "SLOPES",
    "build_contact_table",
    "slope_histogram",
    "positional_distribution",
    "pmi_from_counts",
    "pmi",
    "pmi_matrix",
    "pmi_by_slope",
    "fit_trend",
]

SLOPES = tuple(range(-4, 5))

Event = Union[str, SonorityCategory]


class Weighting(enum.Enum):
    TYPE = "type"
    TOKEN = "token"


class Position(enum.Enum):
    CODA = "coda"
    ONSET = "onset"


class Granularity(enum.Enum):
    PHONEME = "phoneme"
    CATEGORY = "category"


@dataclass(frozen=True)
class Reject:
    row: int | None
    entry: LexicalEntry
    reason: str


class ContactTable:
    """Type and token counts of coda/onset consonant pairs.

    Marginals are kept up to date as cells are added. Tables built from
    disjoint shards can be combined with ``+``; the result does not depend
    on the order of merging.
    """

    def __init__(self, inventory: Inventory):
        self.inventory = inventory
        self._cells: dict[tuple[str, str], list[int]] = defaultdict(lambda: [0, 0])
        self._coda: dict[str, list[int]] = defaultdict(lambda: [0, 0])
        self._onset: dict[str, list[int]] = defaultdict(lambda: [0, 0])
        self._total = [0, 0]
        self.rejects: list[Reject] = []
        self.hint_mismatches: list[LexicalEntry] = []

    @classmethod
    def from_counts(
        cls,
        inventory: Inventory,
        counts: Mapping[tuple[str, str], int],
        token_counts: Mapping[tuple[str, str], int] | None = None,
    ) -> "ContactTable":
        """Build a table directly from cell counts.

        Token counts default to the type counts.
        """
        table = cls(inventory)
        for (x, y), n in counts.items():
            tok = n if token_counts is None else token_counts.get((x, y), 0)
            table.add(x, y, tok, types=n)
        if token_counts is not None:
            for (x, y), tok in token_counts.items():
                if (x, y) not in counts:
                    table.add(x, y, tok, types=0)
        return table

    def add(self, coda: str, onset: str, token_freq: int = 1, types: int = 1) -> None:
        if types < 0 or token_freq < 0:
            raise ValueError("counts must be non-negative")
        for sym in (coda, onset):
            if not self.inventory.get(sym).is_consonant:
                raise SylContactError(f"{sym!r} is not a consonant")
        for slot in (self._cells[coda, onset], self._coda[coda], self._onset[onset], self._total):
            slot[0] += types
            slot[1] += token_freq

    def __add__(self, other: "ContactTable") -> "ContactTable":
        if not isinstance(other, ContactTable):
            return NotImplemented
        if other.inventory != self.inventory:
            raise SylContactError("cannot merge tables built over different inventories")
        merged = ContactTable(self.inventory)
        for table in (self, other):
            for (x, y), (t, k) in table._cells.items():
                merged.add(x, y, k, types=t)
            merged.rejects.extend(table.rejects)
            merged.hint_mismatches.extend(table.hint_mismatches)
        return merged

    def transposed(self) -> "ContactTable":
        """Swap the coda and onset axes."""
        out = ContactTable(self.inventory)
        for (x, y), (t, k) in self._cells.items():
            out.add(y, x, k, types=t)
        return out

    def cells(self) -> Iterator[tuple[tuple[str, str], int, int]]:
        """Yield ``((coda, onset), type_count, token_count)`` in sorted order."""
        for key in sorted(self._cells):
            t, k = self._cells[key]
            yield key, t, k

    def __len__(self) -> int:
        return sum(1 for c in self._cells.values() if c[0] or c[1])

    @staticmethod
    def _idx(w: Weighting) -> int:
        return 0 if Weighting(w) is Weighting.TYPE else 1

    def total(self, w: Weighting = Weighting.TYPE) -> int:
        return self._total[self._idx(w)]

    def count(self, coda: Event, onset: Event, w: Weighting = Weighting.TYPE) -> int:
        i = self._idx(w)
        if isinstance(coda, str) and isinstance(onset, str):
            cell = self._cells.get((coda, onset))
            return cell[i] if cell else 0
        return sum(
            c[i] for (x, y), c in self._cells.items()
            if self._matches(x, coda) and self._matches(y, onset)
        )

    def coda_total(self, x: Event, w: Weighting = Weighting.TYPE) -> int:
        return self._marginal(self._coda, x, w)

    def onset_total(self, y: Event, w: Weighting = Weighting.TYPE) -> int:
        return self._marginal(self._onset, y, w)

    def _marginal(self, margin: dict[str, list[int]], e: Event, w: Weighting) -> int:
        i = self._idx(w)
        if isinstance(e, str):
            row = margin.get(e)
            return row[i] if row else 0
        return sum(c[i] for sym, c in margin.items() if self._matches(sym, e))

    def _matches(self, symbol: str, event: Event) -> bool:
        if isinstance(event, SonorityCategory):
            return self.inventory.get(symbol).category is event
        return symbol == event

    def coda_symbols(self, w: Weighting = Weighting.TYPE) -> list[str]:
        i = self._idx(w)
        return sorted(s for s, c in self._coda.items() if c[i] > 0)

    def onset_symbols(self, w: Weighting = Weighting.TYPE) -> list[str]:
        i = self._idx(w)
        return sorted(s for s, c in self._onset.items() if c[i] > 0)

    def slope_of(self, coda: Event, onset: Event) -> int:
        return _category(self.inventory, onset).level - _category(self.inventory, coda).level

    def check_consistency(self) -> None:
        """Raise ``AssertionError`` unless every cached marginal matches its cells."""
        for i in (0, 1):
            rows: dict[str, int] = defaultdict(int)
            cols: dict[str, int] = defaultdict(int)
            for (x, y), c in self._cells.items():
                rows[x] += c[i]
                cols[y] += c[i]
            assert all(self._coda[x][i] == n for x, n in rows.items())
            assert all(self._onset[y][i] == n for y, n in cols.items())
            assert sum(c[i] for c in self._coda.values()) == self._total[i]
            assert sum(c[i] for c in self._onset.values()) == self._total[i]

    def __repr__(self) -> str:
        return f"ContactTable(cells={len(self)}, types={self._total[0]}, tokens={self._total[1]})"


def _category(inv: Inventory, e: Event) -> SonorityCategory:
    return e if isinstance(e, SonorityCategory) else inv.get(e).category


def build_contact_table(entries: Iterable[LexicalEntry], inv: Inventory) -> ContactTable:
    """Count the single contact pair of every CVC.CVC word in ``entries``.

    Entries that fail to parse, or parse to another shape, are recorded in
    ``table.rejects`` with a reason and otherwise skipped.
    """
    table = ContactTable(inv)
    for entry in entries:
        try:
            word, hints_ok = _parse(inv, entry.transcription, entry)
        except TokenizationError as exc:
            table.rejects.append(Reject(entry.row, entry, f"untokenizable: {exc}"))
            continue
        except SylContactError as exc:
            table.rejects.append(Reject(entry.row, entry, f"unsyllabifiable: {exc}"))
            continue
        if not hints_ok:
            table.hint_mismatches.append(entry)
        shape = shape_of(word)
        if shape != "CVC.CVC":
            table.rejects.append(Reject(entry.row, entry, f"shape {shape} is not CVC.CVC"))
            continue
        (pair,) = extract_contacts(word)
        table.add(pair.coda.symbol, pair.onset.symbol, entry.token_freq)
    return table


def slope_histogram(table: ContactTable, w: Weighting = Weighting.TYPE) -> dict[int, int]:
    hist = dict.fromkeys(SLOPES, 0)
    for (x, y), t, k in table.cells():
        hist[table.slope_of(x, y)] += t if Weighting(w) is Weighting.TYPE else k
    return hist


def positional_distribution(
    table: ContactTable, position: Position, w: Weighting = Weighting.TYPE
) -> dict[SonorityCategory, float]:
    total = table.total(w)
    if total == 0:
        raise EmptyTableError("positional distribution of an empty table is undefined")
    marginal = table.coda_total if Position(position) is Position.CODA else table.onset_total
    return {cat: marginal(cat, w) / total for cat in SonorityCategory}


@dataclass(frozen=True)
class PmiResult:
    value: float
    defined: bool
    joint: int = 0

    def __float__(self) -> float:
        return self.value


def pmi_from_counts(joint: int, x_count: int, y_count: int, total: int) -> PmiResult:
    """log2( p(x,y) / (p(x) p(y)) ) with every probability taken over ``total``."""
    if x_count <= 0 or y_count <= 0 or total <= 0:
        raise UndefinedEventError(
            f"PMI needs positive marginals (x={x_count}, y={y_count}, total={total})"
        )
    if joint < 0 or joint > min(x_count, y_count):
        raise ValueError(f"joint count {joint} inconsistent with marginals {x_count}, {y_count}")
    if joint == 0:
        return PmiResult(math.nan, False, 0)
    # p(x,y) / (p(x) p(y)) == joint * total / (x * y); int / int rounds once.
    value = math.log2(joint * total / (x_count * y_count))
    return PmiResult(value, True, joint)


def pmi(table: ContactTable, x: Event, y: Event, w: Weighting = Weighting.TYPE) -> PmiResult:
    """PMI of coda event ``x`` and onset event ``y``.

    Events are phoneme symbols or :class:`SonorityCategory` members; a
    category event pools the counts of its member phonemes.
    """
    x_count = table.coda_total(x, w)
    y_count = table.onset_total(y, w)
    if x_count == 0 or y_count == 0:
        raise UndefinedEventError(f"event {x!r} or {y!r} never occurs in its position")
    return pmi_from_counts(table.count(x, y, w), x_count, y_count, table.total(w))


def _events(table: ContactTable, granularity: Granularity, w: Weighting) -> tuple[list, list]:
    if Granularity(granularity) is Granularity.PHONEME:
        return table.coda_symbols(w), table.onset_symbols(w)
    codas = [c for c in SonorityCategory if table.coda_total(c, w) > 0]
    onsets = [c for c in SonorityCategory if table.onset_total(c, w) > 0]
    return codas, onsets


def pmi_matrix(
    table: ContactTable, granularity: Granularity = Granularity.CATEGORY, w: Weighting = Weighting.TYPE
) -> dict[tuple[Event, Event], PmiResult]:
    """PMI for every coda/onset event pair with non-zero marginals.

    Pairs that never co-occur are kept with ``defined=False``.
    """
    if table.total(w) == 0:
        raise EmptyTableError("PMI matrix of an empty table is undefined")
    codas, onsets = _events(table, granularity, w)
    return {(x, y): pmi(table, x, y, w) for x in codas for y in onsets}


@dataclass(frozen=True)
class SlopePmi:
    mean_pmi: float
    weight: int
    pairs: int
    skipped: int = 0


def pmi_by_slope(table: ContactTable, w: Weighting = Weighting.TYPE) -> dict[int, SlopePmi]:
    """Count-weighted mean of category-pair PMI at each sonority slope.

    Undefined cells are left out of the mean and counted in ``skipped``;
    slopes with no defined pair are omitted.
    """
    matrix = pmi_matrix(table, Granularity.CATEGORY, w)
    acc: dict[int, list] = defaultdict(lambda: [0.0, 0, 0, 0])
    for (x, y), res in matrix.items():
        slot = acc[y.level - x.level]
        if res.defined:
            slot[0] += res.joint * res.value
            slot[1] += res.joint
            slot[2] += 1
        else:
            slot[3] += 1
    return {
        s: SlopePmi(total / weight, weight, pairs, skipped)
        for s, (total, weight, pairs, skipped) in sorted(acc.items())
        if pairs > 0
    }


@dataclass(frozen=True)
class TrendLine:
    slope: float
    intercept: float

    def __call__(self, x):
        return self.slope * np.asarray(x, dtype=float) + self.intercept


def fit_trend(points: Sequence[tuple[float, float, float]]) -> TrendLine:
    """Weighted least-squares line through ``(x, y, weight)`` points."""
    arr = np.asarray(points, dtype=float).reshape(-1, 3)
    x, y, w = arr.T
    if np.any(w < 0) or not np.all(np.isfinite(arr)):
        raise TrendFitError("weights must be finite and non-negative")
    if not np.any(w > 0):
        raise TrendFitError("all weights are zero")
    if np.unique(x[w > 0]).size < 2:
        raise TrendFitError("need at least two distinct x values with positive weight")
    sw = np.sqrt(w)
    design = np.column_stack([x, np.ones_like(x)]) * sw[:, None]
    (a, b), *_ = np.linalg.lstsq(design, y * sw, rcond=None)
    return TrendLine(float(a), float(b))
