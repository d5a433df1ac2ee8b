"""Relation extraction patterns over sketches.

Two families share one closed catalog of pattern names.  The static
extractors read structure alone and can run on the first pass.  The resolvers
consult an existing knowledge-base snapshot to settle of-PP relation choices,
with-PP attachment, and the instrument reading; anything they cannot settle
is reported as an UnresolvedSite rather than guessed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .corpus import SenseId
from .sketch import (
    COORD_GROUP,
    MatNode,
    NP_KIND,
    PP_ATTACH,
    PP_KIND,
    REL_CLAUSE,
    Sketch,
    VP_KIND,
    materialize,
    reattach,
)

HYPERNYM = "HYPERNYM"
PART = "PART"
PART_OF = "PART-OF"
MATERIAL = "MATERIAL"
INSTRUMENT = "INSTRUMENT"

LABELS = (HYPERNYM, INSTRUMENT, MATERIAL, PART, PART_OF)

GENUS_HYPERNYM = "genus-hypernym"
PART_OF_LITERAL = "part-of-literal"
THAT_HAS_PART = "that-has-part"
WITH_NOUN_PART = "with-noun-part"
FOR_GERUND_INSTRUMENT = "for-gerund-instrument"
OF_PP_RESOLVER = "of-pp-resolver"
WITH_PP_RESOLVER = "with-pp-resolver"
COORD_RESOLVER = "coord-resolver"

PATTERNS = (
    GENUS_HYPERNYM,
    PART_OF_LITERAL,
    THAT_HAS_PART,
    WITH_NOUN_PART,
    FOR_GERUND_INSTRUMENT,
    OF_PP_RESOLVER,
    WITH_PP_RESOLVER,
    COORD_RESOLVER,
)

# heads whose of-complement carries the real hypernym
DEFAULT_TRANSPARENT_HEADS = frozenset(
    {"type", "kind", "sort", "variety", "form", "ceremony"}
)

# heads that name a portion or piece of a substance
DEFAULT_PORTION_HEADS = frozenset(
    {"bar", "piece", "sheet", "block", "lump", "strip", "mass"}
)

# substances known without any bootstrap evidence
DEFAULT_SUBSTANCE_SEEDS = frozenset(
    {"gold", "silver", "metal", "plastic", "wood", "stone", "glass", "water"}
)

NO_LKB_EVIDENCE = "no-lkb-evidence"
RELATION_AMBIGUOUS = "relation-ambiguous"


@dataclass(frozen=True)
class RelationTriple:
    """One extracted relation, stamped with the pass that first derived it."""

    source: SenseId
    label: str
    target: str
    pass_no: int
    pattern: str

    def key(self) -> tuple[SenseId, str, str]:
        return (self.source, self.label, self.target)


@dataclass(frozen=True)
class UnresolvedSite:
    """A configuration a resolver looked at and declined to decide."""

    entry: SenseId
    kind: str  # 'of-pp' | 'with-pp' | 'coord'
    detail: str
    reason: str  # 'no-lkb-evidence' | 'relation-ambiguous'
    site: int | None = None


@dataclass(frozen=True)
class Decision:
    """A resolver's reattachment of one site to a non-default candidate."""

    entry: SenseId
    site_id: int
    to_index: int
    resolver: str
    evidence: str


class _EmptySnapshot:
    """Null knowledge base: every lookup is empty."""

    pass_completed = 0

    def targets(self, lemma: str, label: str) -> tuple[str, ...]:
        return ()


EMPTY_SNAPSHOT = _EmptySnapshot()


# ------------------------------------------------------------- structure --


def _genus(mat, sketch: Sketch) -> MatNode:
    return mat.by_id[sketch.genus]


def _genus_of_pp(mat, sketch: Sketch) -> MatNode | None:
    for child in _genus(mat, sketch).children:
        if child.kind == PP_KIND and child.prep == "of":
            return child
    return None


def _pp_complement(pp: MatNode) -> MatNode | None:
    for child in pp.children:
        if child.kind in (NP_KIND, COORD_GROUP, VP_KIND):
            return child
    return None


def _conjunct_lemmas(node: MatNode) -> list[str]:
    if node.kind == COORD_GROUP:
        out = []
        for child in node.children:
            if child.kind == NP_KIND and child.head is not None:
                out.append(child.head.lemma)
        return out
    if node.head is not None:
        return [node.head.lemma]
    return []


def _genus_complex_ids(mat, sketch: Sketch) -> set[int]:
    """The genus NP plus the NPs of a nominal of-complement."""
    ids = {sketch.genus}
    of_pp = _genus_of_pp(mat, sketch)
    if of_pp is None:
        return ids
    comp = _pp_complement(of_pp)
    if comp is None or comp.kind == VP_KIND:
        return ids
    ids.add(comp.node_id)
    if comp.kind == COORD_GROUP:
        ids.update(c.node_id for c in comp.children)
    return ids


def _walk(node: MatNode):
    yield node
    for child in node.children:
        yield from _walk(child)


# -------------------------------------------------------------- extracts --


def extract_hypernym(
    sketch: Sketch,
    pass_no: int = 1,
    transparent_heads: frozenset[str] = DEFAULT_TRANSPARENT_HEADS,
) -> list[RelationTriple]:
    """Genus term, plus the of-complement behind a transparent head or gerund."""
    mat = materialize(sketch)
    genus = _genus(mat, sketch)
    if genus.head is None:
        return []
    out = [RelationTriple(sketch.entry, HYPERNYM, genus.head.lemma, pass_no, GENUS_HYPERNYM)]
    if genus.kind == VP_KIND:
        return out
    of_pp = _genus_of_pp(mat, sketch)
    if of_pp is None:
        return out
    comp = _pp_complement(of_pp)
    if comp is None:
        return out
    if comp.kind == VP_KIND:
        if comp.head is not None:
            out.append(
                RelationTriple(sketch.entry, HYPERNYM, comp.head.lemma, pass_no, GENUS_HYPERNYM)
            )
    elif genus.head.lemma in transparent_heads:
        for lemma in _conjunct_lemmas(comp):
            out.append(RelationTriple(sketch.entry, HYPERNYM, lemma, pass_no, GENUS_HYPERNYM))
    return out


def extract_part_of_literal(sketch: Sketch, pass_no: int = 1) -> list[RelationTriple]:
    """Genus 'part' with an of-PP names the whole directly."""
    mat = materialize(sketch)
    genus = _genus(mat, sketch)
    if genus.kind != NP_KIND or genus.head is None or genus.head.lemma != "part":
        return []
    of_pp = _genus_of_pp(mat, sketch)
    if of_pp is None:
        return []
    comp = _pp_complement(of_pp)
    if comp is None or comp.kind == VP_KIND:
        return []
    return [
        RelationTriple(sketch.entry, PART_OF, lemma, pass_no, PART_OF_LITERAL)
        for lemma in _conjunct_lemmas(comp)
    ]


def extract_part(sketch: Sketch, pass_no: int = 1) -> list[RelationTriple]:
    """'that has NP' on the genus, and with-PPs sitting on the genus complex."""
    mat = materialize(sketch)
    out = []
    genus = _genus(mat, sketch)
    for child in genus.children:
        if child.kind != REL_CLAUSE:
            continue
        for vp in child.children:
            if vp.kind != VP_KIND or vp.head is None or vp.head.lemma != "have":
                continue
            for obj in vp.children:
                if obj.kind in (NP_KIND, COORD_GROUP):
                    for lemma in _conjunct_lemmas(obj):
                        out.append(
                            RelationTriple(sketch.entry, PART, lemma, pass_no, THAT_HAS_PART)
                        )
    complex_ids = _genus_complex_ids(mat, sketch)
    for node in _walk(mat.root):
        if node.kind != PP_KIND or node.prep != "with":
            continue
        parent = mat.parent_of(node.node_id)
        if parent is None or parent.node_id not in complex_ids:
            continue
        if parent.kind != NP_KIND:
            # a with-PP hanging off a verbal genus is instrument or manner
            # material, never a nominal attribute
            continue
        comp = _pp_complement(node)
        if comp is None or comp.kind == VP_KIND:
            continue
        for lemma in _conjunct_lemmas(comp):
            out.append(RelationTriple(sketch.entry, PART, lemma, pass_no, WITH_NOUN_PART))
    return out


def extract_instrument_for(sketch: Sketch, pass_no: int = 1) -> list[RelationTriple]:
    """'(used) for <gerund>' on the genus names the activity served."""
    mat = materialize(sketch)
    out = []
    for child in _genus(mat, sketch).children:
        if child.kind != PP_KIND or child.prep != "for":
            continue
        comp = _pp_complement(child)
        if comp is not None and comp.kind == VP_KIND and comp.head is not None:
            out.append(
                RelationTriple(
                    sketch.entry, INSTRUMENT, comp.head.lemma, pass_no, FOR_GERUND_INSTRUMENT
                )
            )
    return out


# -------------------------------------------------------------- resolvers --


def _is_substance(lemma: str, snapshot, seeds: frozenset[str]) -> bool:
    """Seed substances, or anything whose hypernym chain reaches a seed."""
    seen = set()
    frontier = [lemma]
    while frontier:
        current = frontier.pop()
        if current in seeds:
            return True
        if current in seen:
            continue
        seen.add(current)
        frontier.extend(snapshot.targets(current, HYPERNYM))
    return False


def resolve_of_pp(
    sketch: Sketch,
    snapshot,
    pass_no: int = 2,
    portion_heads: frozenset[str] = DEFAULT_PORTION_HEADS,
    substance_seeds: frozenset[str] = DEFAULT_SUBSTANCE_SEEDS,
    transparent_heads: frozenset[str] = DEFAULT_TRANSPARENT_HEADS,
) -> tuple[list[RelationTriple], list[UnresolvedSite]]:
    """Settle the relation carried by a genus of-PP.

    In order: PART-OF when the snapshot pairs the two nouns through PART or
    PART-OF evidence, MATERIAL for a portion head over known substances, then
    silent delegation for transparent heads and gerund complements.
    """
    mat = materialize(sketch)
    genus = _genus(mat, sketch)
    if genus.kind != NP_KIND or genus.head is None:
        return [], []
    of_pp = _genus_of_pp(mat, sketch)
    if of_pp is None:
        return [], []
    comp = _pp_complement(of_pp)
    if comp is None:
        return [], []
    modified = genus.head.lemma
    if modified == "part":
        return [], []  # the literal extractor owns this shape
    if comp.kind == VP_KIND:
        return [], []  # gerund complement: hypernym territory
    conjuncts = _conjunct_lemmas(comp)
    matched = [
        c
        for c in conjuncts
        if c in snapshot.targets(modified, PART_OF) or modified in snapshot.targets(c, PART)
    ]
    if matched:
        return (
            [
                RelationTriple(sketch.entry, PART_OF, c, pass_no, OF_PP_RESOLVER)
                for c in matched
            ],
            [],
        )
    if modified in portion_heads and conjuncts and all(
        _is_substance(c, snapshot, substance_seeds) for c in conjuncts
    ):
        return (
            [
                RelationTriple(sketch.entry, MATERIAL, c, pass_no, OF_PP_RESOLVER)
                for c in conjuncts
            ],
            [],
        )
    if modified in transparent_heads:
        return [], []
    detail = f"{modified} of {', '.join(conjuncts)}"
    return [], [UnresolvedSite(sketch.entry, "of-pp", detail, RELATION_AMBIGUOUS)]


def resolve_with_pp(
    sketch: Sketch, snapshot, pass_no: int = 2
) -> tuple[list[RelationTriple], list[Decision], list[UnresolvedSite]]:
    """Read a with-PP near a verb as its instrument when the snapshot already
    knows the complement serves that verb; reattach the PP to the verb."""
    triples: list[RelationTriple] = []
    decisions: list[Decision] = []
    unresolved: list[UnresolvedSite] = []
    mat = materialize(sketch)
    for site in sketch.sites:
        if site.kind != PP_ATTACH:
            continue
        movable = mat.by_id[site.movable]
        if movable.prep != "with":
            continue
        vp_index = next(
            (
                k
                for k, cand in enumerate(site.candidates)
                if sketch.nodes[cand].kind == VP_KIND
            ),
            None,
        )
        if vp_index is None:
            continue  # noun-only attachment, the part pattern owns it
        vp_node = sketch.nodes[site.candidates[vp_index]]
        verb = sketch.tokens[vp_node.head].lemma if vp_node.head is not None else None
        comp = _pp_complement(movable)
        if verb is None or comp is None or comp.kind == VP_KIND:
            continue
        conjuncts = _conjunct_lemmas(comp)
        hits = [c for c in conjuncts if verb in snapshot.targets(c, INSTRUMENT)]
        detail = f"{verb} with {', '.join(conjuncts)}"
        if not hits:
            unresolved.append(
                UnresolvedSite(sketch.entry, "with-pp", detail, NO_LKB_EVIDENCE, site.site_id)
            )
            continue
        if site.chosen != vp_index:
            decisions.append(
                Decision(
                    sketch.entry,
                    site.site_id,
                    vp_index,
                    WITH_PP_RESOLVER,
                    f"{hits[0]} {INSTRUMENT} {verb}",
                )
            )
        for c in conjuncts:
            triples.append(
                RelationTriple(sketch.entry, INSTRUMENT, c, pass_no, WITH_PP_RESOLVER)
            )
    return triples, decisions, unresolved


def apply_decisions(sketch: Sketch, decisions: list[Decision]) -> Sketch:
    for decision in decisions:
        sketch = reattach(sketch, decision.site_id, decision.to_index)
    return sketch


def run_patterns(
    sketch: Sketch,
    snapshot,
    pass_no: int,
    transparent_heads: frozenset[str] = DEFAULT_TRANSPARENT_HEADS,
    portion_heads: frozenset[str] = DEFAULT_PORTION_HEADS,
    substance_seeds: frozenset[str] = DEFAULT_SUBSTANCE_SEEDS,
) -> tuple[list[RelationTriple], list[Decision], list[UnresolvedSite]]:
    """All patterns over one sketch.

    Pass 1 never reads the snapshot: the with-PP resolver is skipped and the
    of-PP resolver runs against an empty knowledge base, so first-pass output
    depends on the definition text alone.
    """
    decisions: list[Decision] = []
    unresolved: list[UnresolvedSite] = []
    triples: list[RelationTriple] = []
    if pass_no <= 1:
        lkb = EMPTY_SNAPSHOT
    else:
        lkb = snapshot
        with_triples, decisions, with_unresolved = resolve_with_pp(sketch, lkb, pass_no)
        triples.extend(with_triples)
        unresolved.extend(with_unresolved)
        sketch = apply_decisions(sketch, decisions)
    triples.extend(extract_hypernym(sketch, pass_no, transparent_heads))
    triples.extend(extract_part_of_literal(sketch, pass_no))
    triples.extend(extract_part(sketch, pass_no))
    triples.extend(extract_instrument_for(sketch, pass_no))
    of_triples, of_unresolved = resolve_of_pp(
        sketch, lkb, pass_no, portion_heads, substance_seeds, transparent_heads
    )
    triples.extend(of_triples)
    unresolved.extend(of_unresolved)
    seen = set()
    unique = []
    for t in triples:
        if t.key() not in seen:
            seen.add(t.key())
            unique.append(t)
    return unique, decisions, unresolved
