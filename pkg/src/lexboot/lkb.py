"""Knowledge-base snapshots: monotone triple stores with pass provenance.

A snapshot is immutable; each pass produces a successor through merge().
Serialization is a sorted tab-separated dump with a versioned header, and
deserialize(serialize(s)) reproduces s exactly, including the pass counter.
"""

from __future__ import annotations

from typing import Iterable

from .corpus import Corpus, SenseId
from .errors import BadPassStamp, ParseError
from .patterns import LABELS, RelationTriple
from .textproc import content_lemmas, tokenize

HEADER = "#lexboot-lkb v1"

_POS_FROM_SHORT = {"n": "noun", "v": "verb"}


def _sort_key(t: RelationTriple):
    return (
        t.source.headword,
        t.label,
        t.target,
        t.source.pos_short(),
        t.source.sense_label,
        t.source.source,
    )


class LkbSnapshot:
    """Immutable set of relation triples plus the number of passes behind it."""

    def __init__(self, triples: Iterable[RelationTriple] = (), pass_completed: int = 0):
        by_key: dict = {}
        for t in triples:
            existing = by_key.get(t.key())
            if existing is None or t.pass_no < existing.pass_no:
                by_key[t.key()] = t
        self._by_key = by_key
        self.pass_completed = pass_completed
        self.triples: tuple[RelationTriple, ...] = tuple(
            sorted(by_key.values(), key=_sort_key)
        )
        by_source: dict[str, list[RelationTriple]] = {}
        for t in self.triples:
            by_source.setdefault(t.source.headword, []).append(t)
        self._by_source = by_source

    def targets(self, lemma: str, label: str) -> tuple[str, ...]:
        """Sorted distinct targets of (lemma, label) across all senses."""
        found = {
            t.target for t in self._by_source.get(lemma, ()) if t.label == label
        }
        return tuple(sorted(found))

    def pairs(self, lemma: str) -> set[tuple[str, str]]:
        """Distinct (label, target) pairs recorded for a lemma."""
        return {(t.label, t.target) for t in self._by_source.get(lemma, ())}

    def has(self, key) -> bool:
        return key in self._by_key

    def __len__(self) -> int:
        return len(self.triples)

    def __iter__(self):
        return iter(self.triples)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LkbSnapshot):
            return NotImplemented
        return (
            self.pass_completed == other.pass_completed
            and self.triples == other.triples
        )

    def __repr__(self) -> str:
        return f"LkbSnapshot({len(self.triples)} triples, pass {self.pass_completed})"


EMPTY = LkbSnapshot()


def merge(snapshot: LkbSnapshot, new_triples: Iterable[RelationTriple]) -> LkbSnapshot:
    """Successor snapshot; duplicates keep their earliest pass provenance."""
    expected = snapshot.pass_completed + 1
    fresh = list(new_triples)
    for t in fresh:
        if t.pass_no != expected:
            raise BadPassStamp(
                f"triple stamped pass {t.pass_no}, expected {expected}: "
                f"{t.source.headword} {t.label} {t.target}"
            )
    combined = dict(snapshot._by_key)
    for t in fresh:
        combined.setdefault(t.key(), t)
    return LkbSnapshot(combined.values(), pass_completed=expected)


def targets(snapshot: LkbSnapshot, lemma: str, label: str) -> tuple[str, ...]:
    return snapshot.targets(lemma, label)


def similarity(
    snapshot: LkbSnapshot,
    corpus: Corpus,
    a: str,
    b: str,
    weights: tuple[int, int] = (2, 1),
) -> int:
    """Overlap score between two lemmas: shared (label, target) pairs from the
    snapshot, plus shared content lemmas of their definitions."""
    pair_weight, text_weight = weights
    shared_pairs = snapshot.pairs(a) & snapshot.pairs(b)

    def text(lemma: str) -> set[str]:
        out: set[str] = set()
        for entry in corpus.lookup(lemma):
            out |= content_lemmas(tokenize(entry.definition))
        return out

    shared_text = text(a) & text(b)
    return pair_weight * len(shared_pairs) + text_weight * len(shared_text)


def format_triple(t: RelationTriple) -> str:
    """One dump row: headword, pos, citation, label, target, pass, pattern."""
    return "\t".join(
        (
            t.source.headword,
            t.source.pos_short(),
            t.source.citation(),
            t.label,
            t.target,
            str(t.pass_no),
            t.pattern,
        )
    )


def serialize(snapshot: LkbSnapshot) -> str:
    """Sorted dump, one triple per line under a versioned header."""
    lines = [f"{HEADER} pass={snapshot.pass_completed}"]
    lines.extend(format_triple(t) for t in snapshot.triples)
    return "\n".join(lines) + "\n"


def deserialize(text: str) -> LkbSnapshot:
    lines = text.splitlines()
    if not lines or not lines[0].startswith(HEADER):
        raise ParseError(1, f"missing {HEADER!r} header")
    header_rest = lines[0][len(HEADER):].strip()
    pass_completed = None
    if header_rest:
        if not header_rest.startswith("pass="):
            raise ParseError(1, f"unrecognized header suffix {header_rest!r}")
        try:
            pass_completed = int(header_rest[len("pass="):])
        except ValueError:
            raise ParseError(1, f"bad pass counter {header_rest!r}") from None
    triples = []
    for line_no, raw in enumerate(lines[1:], start=2):
        line = raw.rstrip()
        if not line or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 7:
            raise ParseError(line_no, f"expected 7 fields, got {len(fields)}")
        headword, pos_short, citation, label, target, pass_str, pattern = fields
        if pos_short not in _POS_FROM_SHORT:
            raise ParseError(line_no, f"unknown pos {pos_short!r}")
        if label not in LABELS:
            raise ParseError(line_no, f"unknown label {label!r}")
        if " " not in citation:
            raise ParseError(line_no, f"bad sense citation {citation!r}")
        source_tag, sense_label = citation.split(" ", 1)
        try:
            pass_no = int(pass_str)
        except ValueError:
            raise ParseError(line_no, f"bad pass number {pass_str!r}") from None
        if pass_no < 1:
            raise ParseError(line_no, f"bad pass number {pass_str!r}")
        if not target:
            raise ParseError(line_no, "empty target")
        sense = SenseId(headword, _POS_FROM_SHORT[pos_short], sense_label, source_tag)
        triples.append(RelationTriple(sense, label, target, pass_no, pattern))
    if pass_completed is None:
        pass_completed = max((t.pass_no for t in triples), default=0)
    return LkbSnapshot(triples, pass_completed=pass_completed)
