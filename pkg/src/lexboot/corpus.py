"""Dictionary corpus loading and serialization.

Corpus files are tab-separated, one sense per line:

    headword<TAB>pos<TAB>sense_label<TAB>source<TAB>definition

Lines starting with ``#`` are comments and blank lines are allowed; both are
preserved so that load followed by serialize reproduces the file byte for
byte, modulo trailing-whitespace normalization and headword lowercasing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import IO, Iterable, Iterator

from .errors import BadPos, DuplicateSense, MalformedLine

POS_CODES = {"n": "noun", "v": "verb", "vi": "verb", "vt": "verb"}

_POS_SHORT = {"noun": "n", "verb": "v"}


@dataclass(frozen=True, order=True)
class SenseId:
    """Identity of one dictionary sense."""

    headword: str
    pos: str  # "noun" | "verb"
    sense_label: str
    source: str

    def citation(self) -> str:
        """Source-first rendering, e.g. ``L 1,n,1``."""
        return f"{self.source} {self.sense_label}"

    def pos_short(self) -> str:
        return _POS_SHORT[self.pos]

    def selector(self) -> str:
        return f"{self.headword}/{self.pos_short()}/{self.sense_label}"


@dataclass(frozen=True)
class DictEntry:
    """One sense with its definition text.

    ``pos_code`` keeps the raw file code (``vi``, ``vt``) so serialization can
    reproduce it; ``id.pos`` is the collapsed category.
    """

    id: SenseId
    definition: str
    pos_code: str


class Corpus:
    """An ordered collection of dictionary entries with a headword index."""

    def __init__(self, lines: list[tuple[str, object]]):
        self._lines = lines
        self.entries: tuple[DictEntry, ...] = tuple(
            item for kind, item in lines if kind == "entry"
        )
        index: dict[str, list[DictEntry]] = {}
        for entry in self.entries:
            index.setdefault(entry.id.headword, []).append(entry)
        self._index = {word: tuple(found) for word, found in index.items()}

    def lookup(self, lemma: str) -> tuple[DictEntry, ...]:
        """All entries whose headword equals the lemma; empty tuple if none."""
        return self._index.get(lemma, ())

    def __iter__(self) -> Iterator[DictEntry]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)


def _parse_line(line: str, line_no: int) -> DictEntry:
    fields = line.split("\t")
    if len(fields) != 5:
        raise MalformedLine(line_no, f"expected 5 tab-separated fields, got {len(fields)}")
    headword, pos_code, sense_label, source, definition = fields
    headword = headword.strip().lower()
    pos_code = pos_code.strip()
    sense_label = sense_label.strip()
    source = source.strip()
    if not headword:
        raise MalformedLine(line_no, "empty headword")
    if not sense_label:
        raise MalformedLine(line_no, "empty sense label")
    if len(source) != 1:
        raise MalformedLine(line_no, f"source tag must be one letter, got {source!r}")
    if not definition.strip():
        raise MalformedLine(line_no, "empty definition")
    if pos_code not in POS_CODES:
        raise BadPos(line_no, pos_code)
    sense = SenseId(headword, POS_CODES[pos_code], sense_label, source)
    return DictEntry(sense, definition, pos_code)


def load_corpus(stream: IO[str] | str | Iterable[str]) -> Corpus:
    """Load a corpus from a file object, string content, or line iterable."""
    if isinstance(stream, str):
        raw_lines = stream.splitlines()
    else:
        raw_lines = [line.rstrip("\n") for line in stream]
    lines: list[tuple[str, object]] = []
    seen: dict[SenseId, int] = {}
    for line_no, raw in enumerate(raw_lines, start=1):
        line = raw.rstrip()
        if not line:
            lines.append(("blank", ""))
            continue
        if line.startswith("#"):
            lines.append(("comment", line))
            continue
        entry = _parse_line(line, line_no)
        if entry.id in seen:
            raise DuplicateSense(line_no, entry.id.selector())
        seen[entry.id] = line_no
        lines.append(("entry", entry))
    return Corpus(lines)


def load_corpus_path(path: str) -> Corpus:
    with open(path, encoding="utf-8") as handle:
        return load_corpus(handle)


def serialize_corpus(corpus: Corpus) -> str:
    """Render the corpus back to TSV, preserving comments and blank lines."""
    out = []
    for kind, item in corpus._lines:
        if kind == "entry":
            entry = item
            out.append(
                "\t".join(
                    (
                        entry.id.headword,
                        entry.pos_code,
                        entry.id.sense_label,
                        entry.id.source,
                        entry.definition,
                    )
                )
            )
        else:
            out.append(item)
    return "\n".join(out) + "\n" if out else ""
