"""Tokenization, deterministic syllabification and syllable-contact extraction.

The syllable grammar is fixed: every syllable has exactly one onset
consonant, one vowel nucleus and at most two coda consonants (CV, CVC,
CVCC). Under that grammar a string of phonemes has at most one parse, so
:func:`syllabify` is a single left-to-right pass with no search.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import SyllabificationError, TokenizationError
from .inventory import Inventory, Phoneme, SonorityCategory

__all__ = [
    "Syllable",
    "SyllabifiedWord",
    "ContactPair",
    "BoundaryHintWarning",
    "tokenize",
    "tokenize_with_hints",
    "syllabify",
    "parse_word",
    "shape_of",
    "extract_contacts",
    "filter_cvc_cvc",
]

SEPARATORS = frozenset(". \t")
MAX_CODA = 2


class BoundaryHintWarning(UserWarning):
    """A "." in the input disagrees with the computed syllable boundaries."""


@dataclass(frozen=True)
class Syllable:
    onset: Phoneme
    nucleus: Phoneme
    coda: tuple[Phoneme, ...] = ()

    def __post_init__(self):
        if not self.onset.is_consonant:
            raise SyllabificationError(f"onset {self.onset} is not a consonant")
        if not self.nucleus.is_vowel:
            raise SyllabificationError(f"nucleus {self.nucleus} is not a vowel")
        if len(self.coda) > MAX_CODA or not all(c.is_consonant for c in self.coda):
            raise SyllabificationError(f"illegal coda {[str(c) for c in self.coda]}")

    @property
    def phonemes(self) -> tuple[Phoneme, ...]:
        return (self.onset, self.nucleus, *self.coda)

    @property
    def shape(self) -> str:
        return "CV" + "C" * len(self.coda)

    def __len__(self) -> int:
        return 2 + len(self.coda)

    def __str__(self) -> str:
        return "".join(p.symbol for p in self.phonemes)


@dataclass(frozen=True)
class SyllabifiedWord:
    syllables: tuple[Syllable, ...]
    source: object = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if not self.syllables:
            raise SyllabificationError("a word needs at least one syllable")

    @property
    def phonemes(self) -> tuple[Phoneme, ...]:
        return tuple(p for syl in self.syllables for p in syl.phonemes)

    @property
    def shape(self) -> str:
        return shape_of(self)

    def onset_index(self, k: int) -> int:
        """Phoneme index of the onset of syllable ``k``."""
        return sum(len(s) for s in self.syllables[:k])

    def __str__(self) -> str:
        return ".".join(str(s) for s in self.syllables)


@dataclass(frozen=True)
class ContactPair:
    """Coda/onset consonants meeting at the boundary after syllable ``boundary``.

    ``slope`` is onset level minus coda level, so falling sonority is
    negative. ``complex_coda`` marks boundaries whose first syllable has a
    two-consonant coda; the pair then uses the final coda consonant.
    """

    boundary: int
    coda: Phoneme
    onset: Phoneme
    complex_coda: bool = False

    @property
    def coda_category(self) -> SonorityCategory:
        return self.coda.category

    @property
    def onset_category(self) -> SonorityCategory:
        return self.onset.category

    @property
    def slope(self) -> int:
        return self.onset.category.level - self.coda.category.level

    def __str__(self) -> str:
        return f"{self.coda}.{self.onset}"


@lru_cache(maxsize=32)
def _symbol_lengths(symbols: tuple[str, ...]) -> tuple[int, ...]:
    return tuple(sorted({len(s) for s in symbols}, reverse=True))


def tokenize_with_hints(inv: Inventory, transcription: str) -> tuple[list[Phoneme], frozenset[int]]:
    """Greedy longest-match segmentation.

    Returns the phonemes plus the phoneme indices at which a separator
    occurred. Separators are never part of a phoneme and a match never
    spans one.
    """
    lengths = _symbol_lengths(inv.symbols)
    out: list[Phoneme] = []
    hints: set[int] = set()
    i, n = 0, len(transcription)
    while i < n:
        if transcription[i] in SEPARATORS:
            if out:
                hints.add(len(out))
            i += 1
            continue
        for size in lengths:
            piece = transcription[i:i + size]
            if len(piece) == size and piece in inv and not (SEPARATORS & set(piece)):
                out.append(inv.get(piece))
                i += size
                break
        else:
            raise TokenizationError(transcription, i)
    hints.discard(len(out))
    return out, frozenset(hints)


def tokenize(inv: Inventory, transcription: str) -> list[Phoneme]:
    return tokenize_with_hints(inv, transcription)[0]


def _resolve(inv: Inventory, phonemes: Iterable[Phoneme | str]) -> list[Phoneme]:
    return [p if isinstance(p, Phoneme) else inv.get(p) for p in phonemes]


def syllabify(inv: Inventory, phonemes: Sequence[Phoneme | str], source: object = None) -> SyllabifiedWord:
    """Split a phoneme sequence into syllables.

    With ``m`` consonants between two vowels, the last one is the onset of
    the second syllable and the other ``m - 1`` are the coda of the first.
    Raises :class:`SyllabificationError` for anything the grammar rejects.
    """
    seq = _resolve(inv, phonemes)
    if not seq:
        raise SyllabificationError("empty phoneme sequence")
    vowels = [i for i, p in enumerate(seq) if p.is_vowel]
    if not vowels:
        raise SyllabificationError(f"no vowel in {_fmt(seq)}")
    if vowels[0] == 0:
        raise SyllabificationError(f"word-initial vowel in {_fmt(seq)}: onset missing")
    if vowels[0] > 1:
        raise SyllabificationError(f"complex onset in {_fmt(seq)}")

    syllables = []
    onset = 0
    for k, v in enumerate(vowels):
        nxt = vowels[k + 1] if k + 1 < len(vowels) else None
        if nxt is None:
            coda_end = len(seq)
            if coda_end - v - 1 > MAX_CODA:
                raise SyllabificationError(f"word-final coda longer than {MAX_CODA} in {_fmt(seq)}")
        else:
            m = nxt - v - 1
            if m == 0:
                raise SyllabificationError(f"adjacent vowels in {_fmt(seq)}: no onset available")
            if m > MAX_CODA + 1:
                raise SyllabificationError(
                    f"{m} consonants between vowels in {_fmt(seq)}: coda would exceed {MAX_CODA}"
                )
            coda_end = nxt - 1
        syllables.append(Syllable(seq[onset], seq[v], tuple(seq[v + 1:coda_end])))
        onset = coda_end
    return SyllabifiedWord(tuple(syllables), source)


def _parse(inv: Inventory, transcription: str, source: object = None) -> tuple[SyllabifiedWord, bool]:
    phonemes, hints = tokenize_with_hints(inv, transcription)
    word = syllabify(inv, phonemes, source)
    if not hints:
        return word, True
    computed = {word.onset_index(k) for k in range(1, len(word.syllables))}
    return word, hints <= computed


def parse_word(inv: Inventory, transcription: str, source: object = None) -> SyllabifiedWord:
    """Tokenize and syllabify a transcription such as ``"dʒæm.ʃid"``.

    Dots in the input are checked against the computed boundaries; a
    mismatch only issues a :class:`BoundaryHintWarning`.
    """
    word, hints_ok = _parse(inv, transcription, source)
    if not hints_ok:
        warnings.warn(
            f"{transcription!r}: marked boundaries disagree with syllabification {word}",
            BoundaryHintWarning,
            stacklevel=2,
        )
    return word


def shape_of(word: SyllabifiedWord) -> str:
    return ".".join(s.shape for s in word.syllables)


def extract_contacts(word: SyllabifiedWord) -> list[ContactPair]:
    pairs = []
    for k in range(len(word.syllables) - 1):
        first, second = word.syllables[k], word.syllables[k + 1]
        if first.coda:
            pairs.append(ContactPair(k, first.coda[-1], second.onset, len(first.coda) > 1))
    return pairs


def filter_cvc_cvc(words: Iterable[SyllabifiedWord]) -> Iterator[SyllabifiedWord]:
    return (w for w in words if shape_of(w) == "CVC.CVC")


def _fmt(seq: Sequence[Phoneme]) -> str:
    return "/" + "".join(p.symbol for p in seq) + "/"
