"""Repairs for marked syllable contacts: omission, assimilation, metathesis, epenthesis.

Every repair edits the flat phoneme sequence and then re-runs
:func:`~sylcontact.syllabifier.syllabify`, so a repaired word is always
grammar-legal or the repair fails with :class:`RepairError`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import InventoryError, RepairError, SyllabificationError
from .inventory import Inventory
from .syllabifier import SyllabifiedWord, extract_contacts, syllabify

__all__ = ["RepairKind", "RepairStrategy", "RepairOutcome", "apply_repair", "suggest_repairs"]


class RepairKind(enum.IntEnum):
    # Value order is the tie-break order used when ranking suggestions.
    OMISSION = 0
    ASSIMILATION = 1
    METATHESIS = 2
    EPENTHESIS = 3

    @property
    def label(self) -> str:
        return self.name.lower()


@dataclass(frozen=True)
class RepairStrategy:
    """A repair plus its parameters.

    ``target`` is the consonant deleted by omission (``"coda"`` or
    ``"onset"``), ``direction`` the assimilation direction (``"regressive"``:
    the coda copies the onset) and ``vowel`` the epenthetic vowel.
    """

    kind: RepairKind
    target: str = "coda"
    direction: str = "regressive"
    vowel: str | None = None

    def __post_init__(self):
        if self.target not in ("coda", "onset"):
            raise RepairError(f"omission target must be 'coda' or 'onset', not {self.target!r}")
        if self.direction not in ("regressive", "progressive"):
            raise RepairError(f"unknown assimilation direction {self.direction!r}")
        if self.kind is RepairKind.EPENTHESIS and not self.vowel:
            raise RepairError("epenthesis needs a vowel")

    @classmethod
    def omission(cls, target: str = "coda") -> "RepairStrategy":
        return cls(RepairKind.OMISSION, target=target)

    @classmethod
    def assimilation(cls, direction: str = "regressive") -> "RepairStrategy":
        return cls(RepairKind.ASSIMILATION, direction=direction)

    @classmethod
    def metathesis(cls) -> "RepairStrategy":
        return cls(RepairKind.METATHESIS)

    @classmethod
    def epenthesis(cls, vowel: str) -> "RepairStrategy":
        return cls(RepairKind.EPENTHESIS, vowel=vowel)

    def __str__(self) -> str:
        if self.kind is RepairKind.OMISSION:
            return f"omission({self.target})"
        if self.kind is RepairKind.ASSIMILATION:
            return f"assimilation({self.direction})"
        if self.kind is RepairKind.EPENTHESIS:
            return f"epenthesis({self.vowel})"
        return "metathesis"


@dataclass(frozen=True)
class RepairOutcome:
    strategy: RepairStrategy
    boundary: int
    surface: SyllabifiedWord
    old_slope: int | None
    new_slope: int | None

    def __str__(self) -> str:
        return f"{self.surface} [{self.strategy}: {_fmt_slope(self.old_slope)} -> {_fmt_slope(self.new_slope)}]"


def _fmt_slope(s: int | None) -> str:
    return "none" if s is None else f"{s:+d}"


def apply_repair(
    inv: Inventory, word: SyllabifiedWord, boundary: int, strategy: RepairStrategy
) -> RepairOutcome:
    """Apply one repair at the contact after syllable ``boundary``.

    ``new_slope`` is the slope of the contact at the repaired site, or
    ``None`` when the repair leaves no consonant contact there.
    """
    if not 0 <= boundary < len(word.syllables) - 1:
        raise RepairError(f"boundary {boundary} out of range for {word}")
    contact = next((c for c in extract_contacts(word) if c.boundary == boundary), None)
    if contact is None:
        raise RepairError(f"no consonant contact at boundary {boundary} of {word}")

    seq = list(word.phonemes)
    j = word.onset_index(boundary + 1)
    # `anchor` is the index, in the edited sequence, of the first phoneme
    # after the edit; the repaired site is the boundary just before the
    # syllable containing it.
    kind = strategy.kind
    if kind is RepairKind.OMISSION:
        if strategy.target == "coda":
            del seq[j - 1]
            anchor = j - 1
        else:
            del seq[j]
            anchor = j
    elif kind is RepairKind.ASSIMILATION:
        if strategy.direction == "regressive":
            seq[j - 1] = seq[j]
        else:
            seq[j] = seq[j - 1]
        anchor = j
    elif kind is RepairKind.METATHESIS:
        seq[j - 1], seq[j] = seq[j], seq[j - 1]
        anchor = j
    else:
        try:
            vowel = inv.get(strategy.vowel)
        except InventoryError as exc:
            raise RepairError(f"epenthesis vowel: {exc}") from None
        if not vowel.is_vowel:
            raise RepairError(f"epenthesis needs a vowel, {vowel.symbol!r} is a consonant")
        seq.insert(j, vowel)
        anchor = j + 1

    try:
        surface = syllabify(inv, seq, word.source)
    except SyllabificationError as exc:
        raise RepairError(f"{strategy} yields an illegal word: {exc}") from None

    k, start = 0, 0
    while start + len(surface.syllables[k]) <= anchor:
        start += len(surface.syllables[k])
        k += 1
    new_slope = None
    if k > 0:
        site = next((c for c in extract_contacts(surface) if c.boundary == k - 1), None)
        if site is not None:
            new_slope = site.slope
    return RepairOutcome(strategy, boundary, surface, contact.slope, new_slope)


def _candidates(inv: Inventory) -> list[RepairStrategy]:
    return [
        RepairStrategy.omission("coda"),
        RepairStrategy.omission("onset"),
        RepairStrategy.assimilation(),
        RepairStrategy.metathesis(),
        *(RepairStrategy.epenthesis(v.symbol) for v in inv.vowels),
    ]


def suggest_repairs(inv: Inventory, word: SyllabifiedWord, max_slope: int = 0) -> list[RepairOutcome]:
    """Try every repair at every contact whose slope exceeds ``max_slope``.

    Keeps outcomes that bring the slope to ``max_slope`` or below, or that
    dissolve the contact. Sorted by new slope with dissolved contacts first,
    then by repair kind; remaining ties keep enumeration order.
    """
    offending = [c for c in extract_contacts(word) if c.slope > max_slope]
    if not offending:
        raise RepairError(f"nothing to repair in {word}: no contact slope exceeds {max_slope:+d}")
    outcomes = []
    for contact in offending:
        for strategy in _candidates(inv):
            try:
                out = apply_repair(inv, word, contact.boundary, strategy)
            except RepairError:
                continue
            if out.new_slope is None or out.new_slope <= max_slope:
                outcomes.append(out)
    outcomes.sort(key=lambda o: (float("-inf") if o.new_slope is None else o.new_slope, o.strategy.kind))
    return outcomes
