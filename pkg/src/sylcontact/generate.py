"""Seeded synthetic CVC.CVC lexicons.

Each pseudo-word is ``C1 V1 C2 . C3 V2 C4``. The contact consonants C2
(coda) and C3 (onset) are drawn independently of each other: first a
sonority category from the coda or onset weights, then a member phoneme
uniformly within it. C1, C4 and both vowels are uniform over the
inventory. Token frequencies follow a geometric distribution on
{1, 2, ...} with success probability :data:`TOKEN_FREQ_P` (mean 5).

Because coda and onset draws are independent, every coda/onset PMI is zero
in expectation, whatever the weights.
"""

from __future__ import annotations

import json
import math
from importlib import resources
from pathlib import Path
from typing import Any, Mapping

import numpy as np

from .errors import SylContactError
from .inventory import Inventory, SonorityCategory
from .lexicon import LexicalEntry

__all__ = ["TOKEN_FREQ_P", "CategoryWeights", "load_weights", "bundled_weights", "generate_corpus"]

TOKEN_FREQ_P = 0.2


class CategoryWeights:
    """Normalized category probabilities for the coda and onset slots."""

    def __init__(self, coda: Mapping[Any, float] | None = None, onset: Mapping[Any, float] | None = None):
        self.coda = _normalize(coda)
        self.onset = _normalize(onset)

    @classmethod
    def uniform(cls) -> "CategoryWeights":
        return cls()

    def __repr__(self) -> str:
        fmt = lambda d: {c.abbrev: round(p, 4) for c, p in d.items()}  # noqa: E731
        return f"CategoryWeights(coda={fmt(self.coda)}, onset={fmt(self.onset)})"


def _normalize(weights: Mapping[Any, float] | None) -> dict[SonorityCategory, float]:
    if weights is None:
        return {c: 1 / len(SonorityCategory) for c in SonorityCategory}
    raw = dict.fromkeys(SonorityCategory, 0.0)
    for key, value in weights.items():
        cat = key if isinstance(key, SonorityCategory) else SonorityCategory.parse(str(key))
        try:
            value = float(value)
        except (TypeError, ValueError):
            raise SylContactError(f"weight for {cat.label} is not a number: {value!r}") from None
        if not math.isfinite(value) or value < 0:
            raise SylContactError(f"weight for {cat.label} must be finite and non-negative, got {value}")
        raw[cat] = value
    total = sum(raw.values())
    if total <= 0:
        raise SylContactError("at least one category weight must be positive")
    return {c: v / total for c, v in raw.items()}


def load_weights(source: str | Path | Mapping[str, Any]) -> CategoryWeights:
    """Read weights from a JSON file or mapping.

    Either ``{"coda": {...}, "onset": {...}}`` or one flat mapping used for
    both positions. Categories missing from a mapping get weight 0.
    """
    if isinstance(source, Mapping):
        doc = source
    else:
        try:
            doc = json.loads(Path(source).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise SylContactError(f"cannot read weights {source}: {exc}") from exc
    if not isinstance(doc, Mapping):
        raise SylContactError("weights document must be a JSON object")
    if "coda" in doc or "onset" in doc:
        return CategoryWeights(doc.get("coda"), doc.get("onset"))
    flat = {k: v for k, v in doc.items() if k != "description"}
    return CategoryWeights(flat, flat)


def bundled_weights(name: str = "skewed_weights") -> CategoryWeights:
    text = resources.files("sylcontact").joinpath("data", f"{name}.json").read_text(encoding="utf-8")
    return load_weights(json.loads(text))


def _draw_category_members(
    rng: np.random.Generator, inv: Inventory, probs: Mapping[SonorityCategory, float], n: int
) -> np.ndarray:
    cats = list(SonorityCategory)
    for c in cats:
        if probs[c] > 0 and not inv.members(c):
            raise SylContactError(f"category {c.label} has positive weight but no phonemes")
    which = rng.choice(len(cats), size=n, p=[probs[c] for c in cats])
    out = np.empty(n, dtype=object)
    for i, c in enumerate(cats):
        mask = which == i
        k = int(mask.sum())
        if k:
            members = np.array([p.symbol for p in inv.members(c)], dtype=object)
            out[mask] = members[rng.integers(len(members), size=k)]
    return out


def generate_corpus(
    inv: Inventory, n: int, seed: int, weights: CategoryWeights | None = None
) -> list[LexicalEntry]:
    """``n`` CVC.CVC pseudo-words; identical output for identical arguments.

    ``weights=None`` draws coda and onset categories uniformly.
    """
    if n <= 0:
        raise SylContactError(f"n must be positive, got {n}")
    weights = weights or CategoryWeights.uniform()
    rng = np.random.default_rng(seed)
    consonants = np.array([p.symbol for p in inv.consonants], dtype=object)
    vowels = np.array([p.symbol for p in inv.vowels], dtype=object)

    first = consonants[rng.integers(len(consonants), size=n)]
    v1 = vowels[rng.integers(len(vowels), size=n)]
    coda = _draw_category_members(rng, inv, weights.coda, n)
    onset = _draw_category_members(rng, inv, weights.onset, n)
    v2 = vowels[rng.integers(len(vowels), size=n)]
    last = consonants[rng.integers(len(consonants), size=n)]
    freqs = rng.geometric(TOKEN_FREQ_P, size=n)

    # The dot keeps e.g. coda /d/ + onset /ʒ/ from re-tokenizing as /dʒ/.
    width = len(str(n))
    return [
        LexicalEntry(f"w{i + 1:0{width}d}", f"{first[i]}{v1[i]}{coda[i]}.{onset[i]}{v2[i]}{last[i]}", int(freqs[i]), i + 1)
        for i in range(n)
    ]
