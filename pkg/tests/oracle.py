"""Independent brute-force reference pipeline.

Deliberately avoids the library's resolvers, extractors, snapshot type,
and driver.  Configurations are chosen by enumerating every attachment
vector and scoring each whole configuration against the previous pass's
triples; relations are then read off the winning tree by a separate
walker.  Agreement with the library is asserted by the acceptance suite,
never assumed.
"""

from __future__ import annotations

from dataclasses import dataclass

from lexboot.bootstrap import DEFAULT_CONFIG, RunConfig
from lexboot.corpus import Corpus, DictEntry, SenseId
from lexboot.sketch import (
    MatNode,
    Materialized,
    Sketch,
    apply_choices,
    enumerate_attachments,
    materialize,
    parse_definition,
)
from lexboot.textproc import content_lemmas, tokenize

NP, PP, VP = "NP", "PP", "VP"
REL, PART_CL, COORD, ADJP = "RelClause", "PartClause", "CoordGroup", "AdjPhrase"


@dataclass(frozen=True)
class Fact:
    source: SenseId
    label: str
    target: str


# ---------------------------------------------------------------- lookups


def targets(facts: set[Fact], lemma: str, label: str) -> set[str]:
    return {f.target for f in facts if f.source.headword == lemma and f.label == label}


def is_substance(facts: set[Fact], lemma: str, seeds: frozenset[str]) -> bool:
    seen, frontier = set(), [lemma]
    while frontier:
        cur = frontier.pop()
        if cur in seeds:
            return True
        if cur in seen:
            continue
        seen.add(cur)
        frontier.extend(targets(facts, cur, "HYPERNYM"))
    return False


def sim(
    facts: set[Fact], corpus: Corpus, a: str, b: str, weights: tuple[int, int]
) -> int:
    pairs_a = {(f.label, f.target) for f in facts if f.source.headword == a}
    pairs_b = {(f.label, f.target) for f in facts if f.source.headword == b}

    def words(lemma: str) -> set[str]:
        out: set[str] = set()
        for e in corpus.lookup(lemma):
            out.update(content_lemmas(tokenize(e.definition)))
        return out

    pw, tw = weights
    return pw * len(pairs_a & pairs_b) + tw * len(words(a) & words(b))


# ------------------------------------------------- configuration choice


def _head_lemma(sketch: Sketch, node_id: int) -> str | None:
    node = sketch.nodes[node_id]
    if node.head is None:
        return None
    return sketch.tokens[node.head].lemma


def _np_lemmas(node: MatNode) -> list[str]:
    """Conjunct lemmas under one complement node."""
    if node.kind == COORD:
        out = []
        for child in node.children:
            if child.kind == NP and child.head is not None:
                out.append(child.head.lemma)
        return out
    if node.kind == NP and node.head is not None:
        return [node.head.lemma]
    return []


def _score_vector(
    sketch: Sketch,
    vector: tuple[int, ...],
    facts: set[Fact],
    corpus: Corpus,
    config: RunConfig,
) -> int:
    """Evidence score of one full configuration; higher is better.

    A with-PP sitting on a VP scores strongly positive exactly when the
    previous pass recorded INSTRUMENT evidence for one of its objects,
    strongly negative otherwise.  A coordination grouping scores its
    partner similarity, with a flat bonus for the default choice so a
    move happens only on strict improvement.
    """
    chosen = apply_choices(sketch, vector)
    mat = materialize(chosen)
    score = 0
    for site, pick in zip(sketch.sites, vector):
        movable = mat.by_id[site.movable]
        if site.kind == "pp-attach" and movable.prep == "with":
            parent = mat.parent_of(site.movable)
            if parent is not None and parent.kind == VP and parent.head is not None:
                verb = parent.head.lemma
                conjuncts = [
                    lemma
                    for child in movable.children
                    for lemma in _np_lemmas(child)
                ]
                evidenced = any(
                    verb in targets(facts, c, "INSTRUMENT") for c in conjuncts
                )
                score += 10 if evidenced else -10
        elif site.kind == "coord-scope":
            m = _head_lemma(sketch, site.movable)
            partner = _head_lemma(sketch, site.candidates[pick])
            if m is not None and partner is not None:
                score += sim(facts, corpus, partner, m, config.weights)
            if pick == site.chosen:
                score += 1  # strict improvement required to move
    return score


def best_vector(
    sketch: Sketch, facts: set[Fact], corpus: Corpus, config: RunConfig
) -> tuple[int, ...]:
    vectors = enumerate_attachments(sketch)
    return max(
        vectors,
        key=lambda v: (_score_vector(sketch, v, facts, corpus, config),
                       tuple(-x for x in v)),
    )


# --------------------------------------------------------- extraction


def _genus_node(mat: Materialized, sketch: Sketch) -> MatNode:
    return mat.by_id[sketch.genus]


def _of_complement(node: MatNode) -> MatNode | None:
    for child in node.children:
        if child.kind == PP and child.prep == "of":
            for grand in child.children:
                if grand.kind in (NP, VP, COORD):
                    return grand
    return None


def _walk(node: MatNode):
    yield node
    for child in node.children:
        yield from _walk(child)


def extract(
    sketch: Sketch,
    mat: Materialized,
    facts: set[Fact],
    config: RunConfig,
) -> set[tuple[str, str]]:
    """All (label, target) relations supported by one configuration."""
    out: set[tuple[str, str]] = set()
    genus = _genus_node(mat, sketch)
    if genus.head is None:
        return out
    g = genus.head.lemma
    comp = _of_complement(genus)

    if genus.kind == VP:
        out.add(("HYPERNYM", g))
    else:
        out.add(("HYPERNYM", g))
        if comp is not None and comp.kind == VP and comp.head is not None:
            out.add(("HYPERNYM", comp.head.lemma))
        if g in config.transparent_heads and comp is not None:
            for lemma in _np_lemmas(comp):
                out.add(("HYPERNYM", lemma))

    # "part of X" names the whole directly
    if g == "part" and comp is not None and comp.kind != VP:
        for lemma in _np_lemmas(comp):
            out.add(("PART-OF", lemma))

    # genus complex: the genus plus its nominal of-complement heads
    complex_ids = {genus.node_id}
    if comp is not None and comp.kind != VP:
        complex_ids.add(comp.node_id)
        for child in comp.children:
            if child.kind == NP:
                complex_ids.add(child.node_id)

    for node in _walk(mat.root):
        # relative clause "that has X" on the genus
        if node.kind == REL and mat.parent_of(node.node_id) is genus:
            for vp in node.children:
                if vp.kind == VP and vp.head is not None and vp.head.lemma == "have":
                    for obj in vp.children:
                        for lemma in _np_lemmas(obj):
                            out.add(("PART", lemma))
        # "for <activity>" on the genus
        if (
            node.kind == PP
            and node.prep == "for"
            and mat.parent_of(node.node_id) is genus
        ):
            for child in node.children:
                if child.kind == VP and child.head is not None:
                    out.add(("INSTRUMENT", child.head.lemma))
        # with-PPs: nominal attribute on the genus complex, or an
        # instrument of an evidenced activity
        if node.kind == PP and node.prep == "with":
            parent = mat.parent_of(node.node_id)
            if parent is None:
                continue
            conjuncts = [
                lemma for child in node.children for lemma in _np_lemmas(child)
            ]
            if parent.kind == NP and parent.node_id in complex_ids:
                for lemma in conjuncts:
                    out.add(("PART", lemma))
            elif parent.kind == VP and parent.head is not None:
                verb = parent.head.lemma
                if any(verb in targets(facts, c, "INSTRUMENT") for c in conjuncts):
                    for lemma in conjuncts:
                        out.add(("INSTRUMENT", lemma))

    # the of-complement relation ladder
    if comp is not None and comp.kind != VP and g != "part":
        conjuncts = _np_lemmas(comp)
        for c in conjuncts:
            if c in targets(facts, g, "PART-OF") or g in targets(facts, c, "PART"):
                out.add(("PART-OF", c))
        if g in config.portion_heads and conjuncts:
            if all(is_substance(facts, c, config.substance_seeds) for c in conjuncts):
                for c in conjuncts:
                    out.add(("MATERIAL", c))
    return out


# ------------------------------------------------------------- driver


def entry_facts(
    entry: DictEntry,
    facts: set[Fact],
    corpus: Corpus,
    config: RunConfig,
    reattach: bool = True,
) -> set[Fact]:
    """This entry's relations under the evidence-best configuration.

    The first pass takes definitions at face value: every site keeps its
    default nearest attachment and only unambiguous structure counts.
    """
    sketch = parse_definition(entry)
    if reattach:
        vector = best_vector(sketch, facts, corpus, config)
    else:
        vector = tuple(site.chosen for site in sketch.sites)
    mat = materialize(apply_choices(sketch, vector))
    return {
        Fact(entry.id, label, target)
        for label, target in extract(sketch, mat, facts, config)
    }


def run(
    corpus: Corpus, config: RunConfig = DEFAULT_CONFIG
) -> tuple[list[set[Fact]], int | None]:
    """Fixpoint iteration; returns per-pass cumulative fact sets and the
    pass at which nothing changed (None if max_passes ran out)."""
    snapshots: list[set[Fact]] = []
    facts: set[Fact] = set()
    for pass_no in range(1, config.max_passes + 1):
        gathered: set[Fact] = set()
        frozen = set(facts) if pass_no >= 2 else set()
        for entry in corpus.entries:
            gathered |= entry_facts(
                entry, frozen, corpus, config, reattach=pass_no >= 2
            )
        new = facts | gathered
        converged = new == facts
        facts = new
        snapshots.append(set(facts))
        if converged:
            return snapshots, pass_no
    return snapshots, None
