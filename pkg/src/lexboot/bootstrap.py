"""Multi-pass acquisition driver.

Each pass reads one frozen snapshot and writes only at the end, so nothing
acquired during a pass can influence the same pass.  Breadth-first growth:
pass 1 takes whatever the text alone supports; later passes replay every
entry against the previous snapshot, letting the resolvers settle what the
first pass had to leave open.
"""

from __future__ import annotations

from dataclasses import dataclass

from .corpus import Corpus, SenseId
from .lkb import EMPTY, LkbSnapshot, merge, similarity
from .patterns import (
    COORD_RESOLVER,
    DEFAULT_PORTION_HEADS,
    DEFAULT_SUBSTANCE_SEEDS,
    DEFAULT_TRANSPARENT_HEADS,
    Decision,
    NO_LKB_EVIDENCE,
    RelationTriple,
    UnresolvedSite,
    apply_decisions,
    run_patterns,
)
from .sketch import COORD_SCOPE, Sketch, parse_definition
from .textproc import tokenize

STATUS_CONVERGED = "converged"
STATUS_MAX_PASSES = "max-passes"


@dataclass(frozen=True)
class RunConfig:
    max_passes: int = 5
    transparent_heads: frozenset[str] = DEFAULT_TRANSPARENT_HEADS
    portion_heads: frozenset[str] = DEFAULT_PORTION_HEADS
    substance_seeds: frozenset[str] = DEFAULT_SUBSTANCE_SEEDS
    pair_weight: int = 2
    text_weight: int = 1
    emit_unresolved: bool = True

    @property
    def weights(self) -> tuple[int, int]:
        return (self.pair_weight, self.text_weight)


DEFAULT_CONFIG = RunConfig()


@dataclass(frozen=True)
class PassReport:
    pass_no: int
    new_triples: int
    reattachments: int
    delta: tuple[RelationTriple, ...]
    decisions: tuple[Decision, ...]
    unresolved: tuple[UnresolvedSite, ...]
    fallback_entries: tuple[SenseId, ...]


@dataclass(frozen=True)
class RunResult:
    snapshot: LkbSnapshot
    reports: tuple[PassReport, ...]
    status: str  # 'converged' | 'max-passes'


def resolve_coordination(
    sketch: Sketch,
    snapshot: LkbSnapshot,
    corpus: Corpus,
    config: RunConfig = DEFAULT_CONFIG,
) -> tuple[list[Decision], list[UnresolvedSite]]:
    """Move a coordination's movable conjunct to the most similar partner.

    Strict improvement over the current choice is required; ties keep the
    default, nearest-first.
    """
    decisions: list[Decision] = []
    unresolved: list[UnresolvedSite] = []
    for site in sketch.sites:
        if site.kind != COORD_SCOPE:
            continue
        movable_node = sketch.nodes[site.movable]
        if movable_node.head is None:
            continue
        movable = sketch.tokens[movable_node.head].lemma

        def head_of(nid: int) -> str:
            node = sketch.nodes[nid]
            return sketch.tokens[node.head].lemma if node.head is not None else "?"

        scores = [
            similarity(snapshot, corpus, head_of(c), movable, config.weights)
            for c in site.candidates
        ]
        best = max(range(len(scores)), key=lambda k: (scores[k], -k))
        current = site.chosen
        if scores[best] > scores[current]:
            evidence = (
                f"similarity({head_of(site.candidates[best])}, {movable}) = {scores[best]}"
                f" > similarity({head_of(site.candidates[current])}, {movable})"
                f" = {scores[current]}"
            )
            decisions.append(
                Decision(sketch.entry, site.site_id, best, COORD_RESOLVER, evidence)
            )
        else:
            detail = (
                f"{movable} after {', '.join(head_of(c) for c in site.candidates)}"
            )
            unresolved.append(
                UnresolvedSite(sketch.entry, "coord", detail, NO_LKB_EVIDENCE, site.site_id)
            )
    return decisions, unresolved


def run_pass(
    corpus: Corpus,
    snapshot: LkbSnapshot,
    config: RunConfig = DEFAULT_CONFIG,
) -> tuple[LkbSnapshot, PassReport]:
    """One breadth-first pass over every entry against the frozen snapshot."""
    pass_no = snapshot.pass_completed + 1
    gathered: list[RelationTriple] = []
    decisions: list[Decision] = []
    unresolved: list[UnresolvedSite] = []
    fallbacks: list[SenseId] = []
    for entry in corpus:
        sketch = parse_definition(entry, tokenize(entry.definition))
        if sketch.fallback:
            fallbacks.append(entry.id)
        if pass_no >= 2:
            coord_decisions, coord_open = resolve_coordination(
                sketch, snapshot, corpus, config
            )
            sketch = apply_decisions(sketch, coord_decisions)
            decisions.extend(coord_decisions)
            unresolved.extend(coord_open)
        triples, with_decisions, open_sites = run_patterns(
            sketch,
            snapshot,
            pass_no,
            transparent_heads=config.transparent_heads,
            portion_heads=config.portion_heads,
            substance_seeds=config.substance_seeds,
        )
        gathered.extend(triples)
        decisions.extend(with_decisions)
        unresolved.extend(open_sites)
    merged = merge(snapshot, gathered)
    delta = tuple(t for t in merged.triples if t.pass_no == pass_no)
    report = PassReport(
        pass_no=pass_no,
        new_triples=len(delta),
        reattachments=len(decisions),
        delta=delta,
        decisions=tuple(decisions),
        unresolved=tuple(unresolved) if config.emit_unresolved else (),
        fallback_entries=tuple(fallbacks),
    )
    return merged, report


def _decision_signature(report: PassReport) -> frozenset:
    return frozenset((d.entry, d.site_id, d.to_index) for d in report.decisions)


def run_until_converged(
    corpus: Corpus,
    config: RunConfig = DEFAULT_CONFIG,
) -> RunResult:
    """Run passes until a pass adds nothing and repeats the previous pass's
    attachment decisions, or until max_passes is spent."""
    snapshot = EMPTY
    reports: list[PassReport] = []
    previous_signature: frozenset = frozenset()
    while len(reports) < config.max_passes:
        snapshot, report = run_pass(corpus, snapshot, config)
        reports.append(report)
        signature = _decision_signature(report)
        if report.new_triples == 0 and signature == previous_signature:
            return RunResult(snapshot, tuple(reports), STATUS_CONVERGED)
        previous_signature = signature
    return RunResult(snapshot, tuple(reports), STATUS_MAX_PASSES)


def run_passes(
    corpus: Corpus,
    count: int,
    config: RunConfig = DEFAULT_CONFIG,
) -> RunResult:
    """Run exactly count passes regardless of convergence."""
    snapshot = EMPTY
    reports: list[PassReport] = []
    previous_signature: frozenset = frozenset()
    converged = False
    for _ in range(count):
        snapshot, report = run_pass(corpus, snapshot, config)
        reports.append(report)
        signature = _decision_signature(report)
        converged = report.new_triples == 0 and signature == previous_signature
        previous_signature = signature
    status = STATUS_CONVERGED if converged else STATUS_MAX_PASSES
    return RunResult(snapshot, tuple(reports), status)
