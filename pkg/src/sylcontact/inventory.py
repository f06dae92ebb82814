"""Phoneme inventories and the five-level consonant sonority scale.

An inventory is loaded from a small JSON document::

    {"name": "persian",
     "phonemes": [{"symbol": "a", "class": "vowel"},
                  {"symbol": "t", "class": "consonant", "category": "Stop"}]}

Vowels carry no sonority level; only consonant-consonant slopes are ever
computed, so :func:`sonority_of` refuses vowels.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any, Mapping

from .errors import InventoryError

__all__ = [
    "SonorityCategory",
    "PhonemeClass",
    "Phoneme",
    "Inventory",
    "load_inventory",
    "load_inventory_file",
    "default_inventory",
    "sonority_of",
    "classify",
]


class SonorityCategory(enum.IntEnum):
    """Consonant sonority categories; the integer value is the level."""

    STOP = 1
    AFFRICATE = 2
    FRICATIVE = 3
    NASAL = 4
    LIQUID = 5

    @property
    def level(self) -> int:
        return int(self.value)

    @property
    def label(self) -> str:
        return self.name.capitalize()

    @property
    def abbrev(self) -> str:
        return _ABBREV[self]

    @classmethod
    def parse(cls, name: str) -> "SonorityCategory":
        """Look a category up by name ("Nasal") or abbreviation ("NA")."""
        if not isinstance(name, str):
            raise InventoryError(f"category must be a string, got {name!r}")
        key = name.strip().upper()
        for cat in cls:
            if key in (cat.name, _ABBREV[cat]):
                return cat
        raise InventoryError(f"unknown sonority category {name!r}")

    def __str__(self) -> str:
        return self.abbrev


# PL (plosive) for stops, as in the usual tabulation of this hierarchy.
_ABBREV = {
    SonorityCategory.STOP: "PL",
    SonorityCategory.AFFRICATE: "AF",
    SonorityCategory.FRICATIVE: "FR",
    SonorityCategory.NASAL: "NA",
    SonorityCategory.LIQUID: "LI",
}


class PhonemeClass(enum.Enum):
    CONSONANT = "C"
    VOWEL = "V"

    @classmethod
    def parse(cls, name: str) -> "PhonemeClass":
        key = str(name).strip().lower()
        if key in ("consonant", "c"):
            return cls.CONSONANT
        if key in ("vowel", "v"):
            return cls.VOWEL
        raise InventoryError(f"unknown phoneme class {name!r}")


@dataclass(frozen=True)
class Phoneme:
    symbol: str
    klass: PhonemeClass
    category: SonorityCategory | None = None

    def __post_init__(self):
        if not self.symbol:
            raise InventoryError("phoneme symbol must be non-empty")
        if self.klass is PhonemeClass.CONSONANT and self.category is None:
            raise InventoryError(f"consonant {self.symbol!r} has no sonority category")
        if self.klass is PhonemeClass.VOWEL and self.category is not None:
            raise InventoryError(f"vowel {self.symbol!r} must not carry a sonority category")

    @property
    def is_vowel(self) -> bool:
        return self.klass is PhonemeClass.VOWEL

    @property
    def is_consonant(self) -> bool:
        return self.klass is PhonemeClass.CONSONANT

    def __str__(self) -> str:
        return self.symbol


@dataclass(frozen=True)
class Inventory:
    """An immutable, validated set of phonemes.

    Phonemes keep their document order, which fixes the iteration order of
    :attr:`vowels` and :attr:`consonants` (and therefore of anything that
    enumerates them, such as repair suggestions).
    """

    name: str
    phonemes: tuple[Phoneme, ...]
    _by_symbol: Mapping[str, Phoneme] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        by_symbol: dict[str, Phoneme] = {}
        for ph in self.phonemes:
            if ph.symbol in by_symbol:
                raise InventoryError(f"duplicate phoneme symbol {ph.symbol!r}")
            by_symbol[ph.symbol] = ph
        if not any(p.is_vowel for p in self.phonemes):
            raise InventoryError("inventory needs at least one vowel")
        if not any(p.is_consonant for p in self.phonemes):
            raise InventoryError("inventory needs at least one consonant")
        object.__setattr__(self, "_by_symbol", by_symbol)

    def __contains__(self, symbol: object) -> bool:
        return symbol in self._by_symbol

    def __len__(self) -> int:
        return len(self.phonemes)

    def __iter__(self):
        return iter(self.phonemes)

    def get(self, symbol: str) -> Phoneme:
        try:
            return self._by_symbol[symbol]
        except KeyError:
            raise InventoryError(f"unknown phoneme {symbol!r}") from None

    @property
    def symbols(self) -> tuple[str, ...]:
        return tuple(p.symbol for p in self.phonemes)

    @property
    def vowels(self) -> tuple[Phoneme, ...]:
        return tuple(p for p in self.phonemes if p.is_vowel)

    @property
    def consonants(self) -> tuple[Phoneme, ...]:
        return tuple(p for p in self.phonemes if p.is_consonant)

    def members(self, category: SonorityCategory) -> tuple[Phoneme, ...]:
        return tuple(p for p in self.phonemes if p.category is category)

    def to_document(self) -> dict[str, Any]:
        """Inverse of :func:`load_inventory`."""
        out = []
        for p in self.phonemes:
            row: dict[str, Any] = {"symbol": p.symbol, "class": p.klass.name.lower()}
            if p.category is not None:
                row["category"] = p.category.label
            out.append(row)
        return {"name": self.name, "phonemes": out}


def load_inventory(config: str | Mapping[str, Any]) -> Inventory:
    """Build an :class:`Inventory` from a JSON string or an already-parsed mapping."""
    if isinstance(config, (str, bytes)):
        try:
            config = json.loads(config)
        except json.JSONDecodeError as exc:
            raise InventoryError(f"inventory document is not valid JSON: {exc}") from exc
    if not isinstance(config, Mapping):
        raise InventoryError("inventory document must be a JSON object")
    rows = config.get("phonemes")
    if not isinstance(rows, list) or not rows:
        raise InventoryError("inventory document has no phonemes")

    phonemes = []
    for i, row in enumerate(rows):
        if not isinstance(row, Mapping):
            raise InventoryError(f"phoneme entry {i} is not an object")
        symbol = row.get("symbol")
        if not isinstance(symbol, str) or not symbol:
            raise InventoryError(f"phoneme entry {i} has no symbol")
        if "class" not in row:
            raise InventoryError(f"phoneme {symbol!r} has no class")
        klass = PhonemeClass.parse(row["class"])
        raw_cat = row.get("category")
        if klass is PhonemeClass.VOWEL and raw_cat is not None:
            raise InventoryError(f"vowel {symbol!r} must not carry a sonority category")
        if klass is PhonemeClass.CONSONANT and raw_cat is None:
            raise InventoryError(f"consonant {symbol!r} has no sonority category")
        category = SonorityCategory.parse(raw_cat) if raw_cat is not None else None
        phonemes.append(Phoneme(symbol, klass, category))

    return Inventory(str(config.get("name", "")), tuple(phonemes))


def load_inventory_file(path: str | Path) -> Inventory:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InventoryError(f"cannot read inventory {path}: {exc}") from exc
    return load_inventory(text)


def default_inventory() -> Inventory:
    """The bundled Persian inventory: 24 consonants and six vowels."""
    text = resources.files("sylcontact").joinpath("data", "persian.json").read_text(encoding="utf-8")
    return load_inventory(text)


def sonority_of(inv: Inventory, symbol: str) -> int:
    ph = inv.get(symbol)
    if ph.category is None:
        raise InventoryError(f"{symbol!r} is a vowel; sonority levels are defined for consonants only")
    return ph.category.level


def classify(inv: Inventory, symbol: str) -> PhonemeClass:
    return inv.get(symbol).klass
