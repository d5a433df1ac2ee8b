"""Per-entry derivation traces.

Replays the pass sequence for one dictionary sense and reports, pass by
pass, which patterns fired, which attachment sites moved and on what
evidence, and what was left unresolved at the end.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bootstrap import DEFAULT_CONFIG, RunConfig, run_pass
from .corpus import Corpus, DictEntry
from .errors import UnknownSense
from .lkb import EMPTY
from .patterns import Decision, RelationTriple, UnresolvedSite, apply_decisions
from .sketch import Sketch, node_label, parse_definition, render_sketch

POS_SHORTS = ("n", "v")


def parse_selector(text: str) -> tuple[str, str | None, str | None]:
    """Split a 'lemma[/pos[/sense]]' selector into its parts."""
    parts = text.split("/")
    if not 1 <= len(parts) <= 3 or not parts[0]:
        raise UnknownSense(f"bad selector {text!r}; expected lemma[/pos[/sense]]")
    lemma = parts[0].lower()
    pos = parts[1].lower() if len(parts) > 1 else None
    sense = parts[2] if len(parts) > 2 else None
    if pos is not None and pos not in POS_SHORTS:
        raise UnknownSense(f"bad selector {text!r}; pos must be one of {POS_SHORTS}")
    return lemma, pos, sense


def find_entry(corpus: Corpus, selector: str) -> DictEntry:
    """The first corpus entry matching the selector, else UnknownSense."""
    lemma, pos, sense = parse_selector(selector)
    for entry in corpus.entries:
        sid = entry.id
        if sid.headword != lemma:
            continue
        if pos is not None and sid.pos_short() != pos:
            continue
        if sense is not None and sid.sense_label != sense:
            continue
        return entry
    raise UnknownSense(f"no entry matches {selector!r}")


@dataclass(frozen=True)
class PassTrace:
    pass_no: int
    triples: tuple[RelationTriple, ...]
    decisions: tuple[Decision, ...]
    unresolved: tuple[UnresolvedSite, ...]


@dataclass(frozen=True)
class EntryTrace:
    entry: DictEntry
    default_sketch: Sketch
    final_sketch: Sketch
    passes: tuple[PassTrace, ...]


def build_trace(
    corpus: Corpus,
    entry: DictEntry,
    passes: int,
    config: RunConfig = DEFAULT_CONFIG,
) -> EntryTrace:
    """Replay the given number of passes, recording this entry's activity."""
    default_sketch = parse_definition(entry)
    snapshot = EMPTY
    traces: list[PassTrace] = []
    last_decisions: tuple[Decision, ...] = ()
    for _ in range(max(passes, 1)):
        snapshot, report = run_pass(corpus, snapshot, config)
        mine_decisions = tuple(d for d in report.decisions if d.entry == entry.id)
        traces.append(
            PassTrace(
                pass_no=report.pass_no,
                triples=tuple(t for t in report.delta if t.source == entry.id),
                decisions=mine_decisions,
                unresolved=tuple(
                    u for u in report.unresolved if u.entry == entry.id
                ),
            )
        )
        if mine_decisions:
            last_decisions = mine_decisions
    final_sketch = apply_decisions(default_sketch, list(last_decisions))
    return EntryTrace(entry, default_sketch, final_sketch, tuple(traces))


def _indent(text: str, prefix: str = "  ") -> str:
    return "\n".join(prefix + line for line in text.splitlines())


def _decision_line(sketch: Sketch, decision: Decision) -> str:
    site = next(s for s in sketch.sites if s.site_id == decision.site_id)
    movable = node_label(sketch, site.movable)
    source = node_label(sketch, site.candidates[site.chosen])
    target = node_label(sketch, site.candidates[decision.to_index])
    return (
        f"moved {movable} from {source} to {target}"
        f"  [{decision.resolver}: {decision.evidence}]"
    )


def render_trace(trace: EntryTrace) -> str:
    """Human-readable multi-pass account of one entry's derivation."""
    sid = trace.entry.id
    lines = [
        f"{sid.headword}  {sid.pos_short()}  {sid.citation()}",
        _indent(trace.entry.definition),
        "",
        "default sketch:",
        _indent(render_sketch(trace.default_sketch).rstrip("\n")),
        "",
    ]
    for pt in trace.passes:
        lines.append(f"pass {pt.pass_no}:")
        body = 0
        for decision in pt.decisions:
            lines.append("  " + _decision_line(trace.default_sketch, decision))
            body += 1
        for triple in pt.triples:
            lines.append(f"  + {triple.label} {triple.target}  [{triple.pattern}]")
            body += 1
        if body == 0:
            lines.append("  (no change)")
    lines.append("")
    lines.append("final sketch:")
    lines.append(_indent(render_sketch(trace.final_sketch).rstrip("\n")))
    lines.append("")
    lines.append("unresolved:")
    final_open = trace.passes[-1].unresolved if trace.passes else ()
    if final_open:
        for u in sorted(final_open, key=lambda u: (u.kind, u.detail)):
            lines.append(f"  {u.kind}: {u.detail}  [{u.reason}]")
    else:
        lines.append("  (none)")
    return "\n".join(lines) + "\n"


def explain(
    corpus: Corpus,
    passes: int,
    selector: str,
    config: RunConfig = DEFAULT_CONFIG,
) -> str:
    """Locate the sense and render its full derivation trace."""
    entry = find_entry(corpus, selector)
    return render_trace(build_trace(corpus, entry, passes, config))
