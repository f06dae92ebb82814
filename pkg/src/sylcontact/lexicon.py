"""Lexicon entries and the tab-separated lexicon file format.

One row per lexeme, three columns: orthography, transcription, token
frequency. Blank lines and lines starting with ``#`` are ignored.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable, TextIO

from .errors import LexiconFormatError

__all__ = ["LexicalEntry", "read_lexicon", "parse_lexicon", "write_lexicon", "bundled_lexicon"]


@dataclass(frozen=True)
class LexicalEntry:
    orthography: str
    transcription: str
    token_freq: int = 1
    row: int | None = None

    def __post_init__(self):
        if isinstance(self.token_freq, bool) or not isinstance(self.token_freq, int):
            raise LexiconFormatError(f"token frequency must be an integer, got {self.token_freq!r}")
        if self.token_freq < 0:
            raise LexiconFormatError(f"token frequency must be non-negative, got {self.token_freq}")


def parse_lexicon(stream: TextIO) -> list[LexicalEntry]:
    entries = []
    data_row = 0
    for lineno, line in enumerate(stream, start=1):
        line = line.rstrip("\r\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        cols = line.split("\t")
        if len(cols) != 3:
            raise LexiconFormatError(f"line {lineno}: expected 3 tab-separated columns, got {len(cols)}")
        orth, trans, freq = cols
        try:
            count = int(freq.strip())
        except ValueError:
            raise LexiconFormatError(f"line {lineno}: token frequency {freq!r} is not an integer") from None
        if count < 0:
            raise LexiconFormatError(f"line {lineno}: negative token frequency {count}")
        data_row += 1
        entries.append(LexicalEntry(orth.strip(), trans.strip(), count, data_row))
    return entries


def read_lexicon(path: str | Path) -> list[LexicalEntry]:
    with open(path, encoding="utf-8", newline="") as fh:
        return parse_lexicon(fh)


def write_lexicon(entries: Iterable[LexicalEntry], stream: TextIO, header: str | None = None) -> None:
    if header:
        for line in header.splitlines():
            stream.write(f"# {line}\n")
    for e in entries:
        stream.write(f"{e.orthography}\t{e.transcription}\t{e.token_freq}\n")


def bundled_lexicon(name: str) -> list[LexicalEntry]:
    """Load a fixture shipped with the package (``"table5"`` or ``"table3"``)."""
    text = resources.files("sylcontact").joinpath("data", f"{name}.tsv").read_text(encoding="utf-8")
    return parse_lexicon(io.StringIO(text))
