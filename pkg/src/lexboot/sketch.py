"""Deterministic surface chunker for definition text.

Definitions follow a small number of syntactic molds, so a rule chunker with
an explicit right frontier is enough: each incoming constituent attaches to
the closest suitable head, and positions where more than one attachment is
possible are recorded as AmbiguitySite records instead of being guessed.
The sketch keeps the default (closest-head) tree; alternative attachments are
realized on demand by materialize(), never by mutating parsed nodes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace

from .corpus import DictEntry, SenseId
from .errors import NoSuchCandidate, NoSuchSite
from .textproc import (
    ADJ,
    CONJ,
    COMPOUND_PREPS,
    DET,
    GERUND,
    NOUN,
    OTHER,
    PREP,
    PUNCT,
    REL_PRON,
    Token,
    VERB,
    tokenize,
)

NP_KIND = "NP"
PP_KIND = "PP"
VP_KIND = "VP"
REL_CLAUSE = "RelClause"
PART_CLAUSE = "PartClause"
COORD_GROUP = "CoordGroup"
ADJ_PHRASE = "AdjPhrase"

PP_ATTACH = "pp-attach"
COORD_SCOPE = "coord-scope"

_HEADABLE = (NOUN, ADJ, GERUND)


@dataclass
class SketchNode:
    """One node of the default tree.  head and premods are token indexes."""

    node_id: int
    kind: str
    head: int | None = None
    children: list[int] = field(default_factory=list)
    prep: str | None = None
    rel: str | None = None
    conj: str | None = None
    role: str | None = None  # 'object' | 'optional-object'
    opaque: bool = False
    etc: bool = False
    premods: tuple[int, ...] = ()


@dataclass(frozen=True)
class AmbiguitySite:
    """A recorded attachment choice.  candidates are node ids, nearest first."""

    site_id: int
    kind: str  # 'pp-attach' | 'coord-scope'
    movable: int
    candidates: tuple[int, ...]
    chosen: int = 0


@dataclass(frozen=True)
class Sketch:
    entry: SenseId
    tokens: tuple[Token, ...]
    nodes: tuple[SketchNode, ...]
    root: int
    genus: int
    sites: tuple[AmbiguitySite, ...]
    fallback: bool = False


class _ParseGiveUp(Exception):
    pass


class _Chunker:
    def __init__(self, entry: DictEntry, tokens: list[Token]):
        self.entry = entry
        self.toks = list(tokens)
        self.i = 0
        self.nodes: list[SketchNode] = []
        self.sites: list[AmbiguitySite] = []
        self.parent: dict[int, int] = {}
        # right frontier of open nodes; None entries are coordination barriers
        self.frontier: list[int | None] = []
        self.root = -1
        self.genus = -1
        self.clause_vp: int | None = None
        self.top_postmods = 0

    # ------------------------------------------------------------- cursor --
    def peek(self, k: int = 0) -> Token | None:
        j = self.i + k
        return self.toks[j] if j < len(self.toks) else None

    def cat(self, k: int = 0) -> str | None:
        t = self.peek(k)
        return t.cat if t else None

    def word(self, k: int = 0) -> str | None:
        t = self.peek(k)
        return t.surface.lower() if t else None

    def take(self) -> Token:
        t = self.toks[self.i]
        self.i += 1
        return t

    def at_end(self) -> bool:
        return self.i >= len(self.toks)

    def compound_prep(self, k: int = 0) -> str | None:
        a, b = self.word(k), self.word(k + 1)
        if a and b and (a, b) in COMPOUND_PREPS:
            return f"{a} {b}"
        return None

    # -------------------------------------------------------------- arena --
    def new_node(self, kind: str, **kw) -> int:
        nid = len(self.nodes)
        self.nodes.append(SketchNode(nid, kind, **kw))
        return nid

    def attach(self, child: int, parent: int) -> None:
        self.nodes[parent].children.append(child)
        self.parent[child] = parent

    def replace_child(self, parent: int, old: int, new: int) -> None:
        kids = self.nodes[parent].children
        kids[kids.index(old)] = new
        self.parent[new] = parent
        self.parent.pop(old, None)

    # ----------------------------------------------------------- frontier --
    def push(self, nid: int) -> None:
        self.frontier.append(nid)

    def push_barrier(self) -> None:
        self.frontier.append(None)

    def pop_np(self, nid: int) -> None:
        for k in range(len(self.frontier) - 1, -1, -1):
            if self.frontier[k] == nid:
                del self.frontier[k]
                return

    def nearest(self, kinds: tuple[str, ...]) -> int | None:
        for x in reversed(self.frontier):
            if x is not None and self.nodes[x].kind in kinds:
                return x
        return None

    def coord_candidates(self) -> list[int]:
        """NP heads a new conjunct could join, innermost first, up to the
        nearest barrier."""
        out = []
        for x in reversed(self.frontier):
            if x is None:
                break
            if self.nodes[x].kind == NP_KIND:
                out.append(x)
        return out

    # ------------------------------------------------------------ phrases --
    def parse_np(self, role: str | None = None) -> int:
        if self.cat() == DET:
            self.take()
        picked: list[int] = []
        while True:
            t = self.peek()
            if t is None or self.compound_prep():
                break
            if t.cat == GERUND:
                nxt = self.peek(1)
                if nxt is not None and nxt.cat in (NOUN, ADJ) and not self.compound_prep(1):
                    picked.append(self.i)
                    self.take()
                    continue
                if not picked:
                    # bare gerund heads the NP ("the meeting of ...")
                    picked.append(self.i)
                    self.take()
                break
            if t.cat in (NOUN, ADJ):
                picked.append(self.i)
                self.take()
                continue
            if t.cat == OTHER:
                self.take()
                continue
            break
        if not picked:
            raise _ParseGiveUp(f"no NP head at token {self.i}")
        head = picked[-1]
        return self.new_node(NP_KIND, head=head, premods=tuple(picked[:-1]), role=role)

    def _join(self, a: int, b: int, conj: str) -> int:
        """Coordinate b with a, reusing a's CoordGroup if it is already in one."""
        pa = self.parent.get(a)
        if pa is not None and self.nodes[pa].kind == COORD_GROUP:
            self.attach(b, pa)
            if self.nodes[pa].conj == "," and conj != ",":
                self.nodes[pa].conj = conj
            return pa
        group = self.new_node(COORD_GROUP, conj=conj, role=self.nodes[a].role)
        self.nodes[a].role = None
        if pa is None:
            self.root = group
        else:
            self.replace_child(pa, a, group)
        self.attach(a, group)
        self.attach(b, group)
        return group

    def _parse_conjunct(self, conj: str) -> int:
        cands = self.coord_candidates()
        if not cands:
            raise _ParseGiveUp("conjunction with nothing to join")
        movable = self.parse_np()
        self._join(cands[0], movable, conj)
        if len(cands) >= 2:
            sid = len(self.sites)
            self.sites.append(
                AmbiguitySite(sid, COORD_SCOPE, movable, tuple(cands), 0)
            )
        self.pop_np(cands[0])
        self.push(movable)
        return movable

    def _list_continues(self) -> bool:
        """At a comma: does a further bare-NP list member follow?"""
        j = self.i + 1
        if self.cat(j - self.i) == DET:
            j += 1
        start = j
        while j < len(self.toks) and self.toks[j].cat in (NOUN, ADJ, GERUND, OTHER):
            j += 1
        if j == start:
            return False
        return j < len(self.toks) and self.toks[j].surface == ","

    def parse_np_list(self, parent: int, role: str | None = None) -> int:
        first = self.parse_np(role=role)
        self.attach(first, parent)
        self.push(first)
        last = first
        while True:
            if self.word() == "," and self.word(1) == "etc.":
                self.take()
                self.take()
                top = self._top_under(first, parent)
                self.nodes[top].etc = True
                break
            if self.word() == "," and self._list_continues():
                self.take()
                nxt = self.parse_np()
                self._join(last, nxt, ",")
                self.pop_np(last)
                self.push(nxt)
                last = nxt
                continue
            if self.cat() == CONJ:
                conj = self.take().lemma
                last = self._parse_conjunct(conj)
                continue
            break
        return self._top_under(first, parent)

    def _top_under(self, nid: int, parent: int) -> int:
        while self.parent.get(nid) != parent:
            nid = self.parent[nid]
        return nid

    # ----------------------------------------------------------- clauses --
    def parse_gerund_clause(self, parent: int) -> int:
        head = self.i
        self.take()
        vp = self.new_node(VP_KIND, head=head)
        self.attach(vp, parent)
        self.push(vp)
        saved = self.clause_vp
        self.clause_vp = vp
        obj_done = False
        while not self.at_end():
            t = self.peek()
            if self.compound_prep() or t.cat == PREP:
                self.dispatch_pp(top=False)
                continue
            if t.cat == OTHER:
                self.take()
                continue
            if not obj_done and t.cat in (DET, NOUN, ADJ, GERUND):
                self.parse_np_list(vp, role="object")
                obj_done = True
                continue
            break
        self.clause_vp = saved
        return vp

    def parse_relclause(self) -> int:
        rel = self.take()
        host = self.nearest((NP_KIND,))
        if host is None:
            host = self.root
        rc = self.new_node(REL_CLAUSE, rel=rel.lemma)
        self.attach(rc, host)
        mark = len(self.frontier)
        self.push_barrier()
        if self.at_end():
            raise _ParseGiveUp("relative clause without a verb")
        self.take()
        vp = self.new_node(VP_KIND, head=self.i - 1)
        self.attach(vp, rc)
        self.push(vp)
        obj_done = False
        while not self.at_end():
            t = self.peek()
            if self.compound_prep() or t.cat == PREP:
                self.dispatch_pp(top=False)
                continue
            if t.cat == OTHER:
                self.take()
                continue
            if t.surface == "," and self.cat(1) == CONJ and self.peek(2) is not None:
                # ", and <verb> ..." continues the clause with a second verb
                self.take()
                self.take()
                vp = self.new_node(VP_KIND, head=self.i)
                self.take()
                self.attach(vp, rc)
                self.push(vp)
                obj_done = False
                continue
            if not obj_done and t.cat in (DET, NOUN, ADJ, GERUND):
                self.parse_np_list(vp, role="object")
                obj_done = True
                continue
            break
        del self.frontier[mark:]
        return rc

    def parse_partclause(self) -> int:
        head = self.i
        self.take()
        host = self.nearest((NP_KIND,))
        if host is None:
            host = self.root
        pc = self.new_node(PART_CLAUSE, head=head)
        self.attach(pc, host)
        self.push(pc)
        obj_done = False
        while not self.at_end():
            t = self.peek()
            if self.compound_prep() or t.cat == PREP:
                self.dispatch_pp(top=False, in_partclause=True)
                continue
            if t.cat == OTHER:
                self.take()
                continue
            if not obj_done and t.cat in (DET, NOUN, ADJ):
                self.parse_np_list(pc, role="object")
                obj_done = True
                continue
            break
        return pc

    def parse_tail(self) -> None:
        """Consume everything that is left into one opaque node."""
        if self.at_end():
            return
        head = None
        start = self.i
        while not self.at_end():
            t = self.take()
            if head is None and t.cat in (ADJ, GERUND, NOUN, VERB):
                head = self.i - 1
        if head is None:
            head = start
        pc = self.new_node(PART_CLAUSE, head=head, opaque=True)
        self.attach(pc, self.root)

    def parse_adjphrase(self) -> None:
        picked: list[int] = []
        while not self.at_end() and self.cat() in (ADJ, NOUN, GERUND, CONJ, OTHER):
            picked.append(self.i)
            self.take()
        heads = [k for k in picked if self.toks[k].cat in _HEADABLE]
        head = heads[-1] if heads else picked[-1]
        node = self.new_node(
            ADJ_PHRASE, head=head, premods=tuple(k for k in picked if k != head)
        )
        host = self.nearest((NP_KIND,))
        self.attach(node, host if host is not None else self.root)

    def _adjphrase_ahead(self) -> bool:
        j = self.i
        while j < len(self.toks) and self.toks[j].cat in (ADJ, NOUN, GERUND, CONJ, OTHER):
            j += 1
        if j == self.i:
            return False
        if j >= len(self.toks):
            return True
        nxt = self.toks[j]
        if nxt.surface != ",":
            return False
        after = self.toks[j + 1] if j + 1 < len(self.toks) else None
        return after is None or after.cat in (REL_PRON, PREP)

    # --------------------------------------------------------------- PPs --
    def dispatch_pp(self, *, top: bool, in_partclause: bool = False) -> None:
        name = self.compound_prep()
        if name:
            self.take()
            self.take()
        else:
            name = self.take().lemma
        if name == "with":
            self.parse_with_pp()
            return
        if name == "for" and self.cat() == GERUND and self.clause_vp is None:
            # instrument formula: "(used) for <gerund> ..." hangs off the genus
            pp = self.new_node(PP_KIND, prep=name)
            self.attach(pp, self.genus)
            self.push_barrier()
            self.parse_gerund_clause(pp)
            return
        target = self.nearest((NP_KIND, VP_KIND, PART_CLAUSE))
        if target is None:
            target = self.root
        pp = self.new_node(PP_KIND, prep=name)
        self.attach(pp, target)
        if not in_partclause:
            self.push_barrier()
        if self.cat() == GERUND and self.peek(1) is not None and self.cat(1) not in (NOUN, ADJ):
            self.parse_gerund_clause(pp)
        else:
            self.parse_np_list(pp)

    def parse_with_pp(self) -> None:
        pp = self.new_node(PP_KIND, prep="with")
        if self.clause_vp is not None:
            cands = self.coord_candidates() + [self.clause_vp]
        elif self.top_postmods == 0:
            near = self.nearest((NP_KIND,))
            if near is None:
                raise _ParseGiveUp("with-PP before any noun")
            cands = [near]
        else:
            cands = [x for x in reversed(self.frontier)
                     if x is not None and self.nodes[x].kind == NP_KIND]
            if not cands:
                raise _ParseGiveUp("with-PP before any noun")
        self.attach(pp, cands[0])
        sid = len(self.sites)
        self.sites.append(AmbiguitySite(sid, PP_ATTACH, pp, tuple(cands), 0))
        self.push_barrier()
        self.parse_np_list(pp)

    # ---------------------------------------------------------- top level --
    def parse_noun_def(self) -> None:
        genus = self.parse_np()
        self.root = genus
        self.genus = genus
        self.push(genus)
        if self.cat() == PREP and self.word() == "of":
            self.take()
            pp = self.new_node(PP_KIND, prep="of")
            self.attach(pp, genus)
            self.push_barrier()
            if self.cat() == GERUND:
                self.parse_gerund_clause(pp)
            else:
                self.parse_np_list(pp)
        self.noun_postmods()

    def noun_postmods(self) -> None:
        while not self.at_end():
            t = self.peek()
            if self.compound_prep() or t.cat == PREP:
                self.dispatch_pp(top=True)
                self.top_postmods += 1
            elif t.surface == ",":
                self.take()
                self.comma_dispatch()
            elif t.cat == REL_PRON:
                self.parse_relclause()
                self.top_postmods += 1
            elif t.cat == GERUND:
                self.parse_partclause()
                self.top_postmods += 1
            elif t.cat == CONJ:
                conj = self.take().lemma
                self._parse_conjunct(conj)
                self.top_postmods += 1
            elif t.cat == OTHER:
                self.take()
            else:
                self.parse_tail()
                self.top_postmods += 1

    def comma_dispatch(self) -> None:
        t = self.peek()
        if t is None:
            return
        if t.surface.lower() == "etc.":
            self.take()
            return
        if t.cat == REL_PRON:
            self.parse_relclause()
            self.top_postmods += 1
            return
        if t.cat == CONJ:
            conj = self.take().lemma
            self._parse_conjunct(conj)
            self.top_postmods += 1
            return
        if self.compound_prep() or t.cat == PREP:
            self.dispatch_pp(top=True)
            self.top_postmods += 1
            return
        if t.cat == GERUND:
            self.parse_partclause()
            self.top_postmods += 1
            return
        if t.cat == ADJ:
            # ", used for <gerund> ..." is the instrument formula; any other
            # participle tail is opaque
            if self.word(1) == "for" and self.cat(2) == GERUND:
                self.take()
                self.dispatch_pp(top=True)
            else:
                self.parse_tail()
            self.top_postmods += 1
            return
        if self._adjphrase_ahead():
            self.parse_adjphrase()
            self.top_postmods += 1
            return
        self.parse_tail()
        self.top_postmods += 1

    def parse_verb_def(self) -> None:
        if self.word() != "to":
            raise _ParseGiveUp("verb definition does not start with 'to'")
        self.take()
        if self.at_end():
            raise _ParseGiveUp("verb definition has no verb")
        vp = self.new_node(VP_KIND, head=self.i)
        self.take()
        self.root = vp
        self.genus = vp
        self.push(vp)
        self.clause_vp = vp
        if self.word() == "(":
            self.take()
            opt = self.parse_np(role="optional-object")
            self.attach(opt, vp)
            if self.word() != ")":
                raise _ParseGiveUp("unclosed parenthetical object")
            self.take()
        obj_done = False
        while not self.at_end():
            t = self.peek()
            if self.compound_prep() or t.cat == PREP:
                self.dispatch_pp(top=False)
                continue
            if t.cat == OTHER:
                self.take()
                continue
            if not obj_done and t.cat in (DET, NOUN, ADJ, GERUND):
                self.parse_np_list(vp, role="object")
                obj_done = True
                continue
            self.parse_tail()


def _fallback_sketch(entry: DictEntry, tokens: list[Token]) -> Sketch:
    """Flat one-node sketch used when chunking gives up."""
    toks = list(tokens)
    pos = entry.id.pos
    head = 0
    kind = NP_KIND
    if pos == "verb":
        kind = VP_KIND
        if len(toks) > 1 and toks[0].surface.lower() == "to":
            head = 1
    else:
        first_prep = next((k for k, t in enumerate(toks) if t.cat == PREP), len(toks))
        headable = [k for k in range(first_prep) if toks[k].cat in _HEADABLE]
        if not headable:
            headable = [k for k, t in enumerate(toks) if t.cat in _HEADABLE]
        if headable:
            head = headable[-1]
    node = SketchNode(0, kind, head=head if toks else None)
    return Sketch(entry.id, tuple(toks), (node,), 0, 0, (), fallback=True)


def parse_definition(entry: DictEntry, tokens: list[Token] | None = None) -> Sketch:
    """Chunk one definition into a Sketch; never raises on bad input."""
    if tokens is None:
        tokens = tokenize(entry.definition)
    chunker = _Chunker(entry, tokens)
    try:
        if entry.id.pos == "verb":
            chunker.parse_verb_def()
        else:
            chunker.parse_noun_def()
        if not chunker.at_end():
            raise _ParseGiveUp("trailing tokens")
        return Sketch(
            entry.id,
            tuple(tokens),
            tuple(chunker.nodes),
            chunker.root,
            chunker.genus,
            tuple(chunker.sites),
        )
    except _ParseGiveUp:
        return _fallback_sketch(entry, tokens)


# ----------------------------------------------------------- realization --


@dataclass
class MatNode:
    """Materialized node: a plain tree honoring the sketch's chosen vector."""

    node_id: int
    kind: str
    head: Token | None
    prep: str | None
    rel: str | None
    conj: str | None
    role: str | None
    opaque: bool
    etc: bool
    site_ref: tuple[int, int, int] | None
    children: list["MatNode"] = field(default_factory=list)


@dataclass
class Materialized:
    root: MatNode
    by_id: dict[int, MatNode]

    def parent_of(self, node_id: int) -> MatNode | None:
        return self._parents.get(node_id)

    def __post_init__(self):
        self._parents: dict[int, MatNode] = {}
        stack = [self.root]
        while stack:
            node = stack.pop()
            for child in node.children:
                self._parents[child.node_id] = node
                stack.append(child)


def materialize(sketch: Sketch) -> Materialized:
    """Apply every site's chosen candidate to a copy of the default tree."""
    children = {n.node_id: list(n.children) for n in sketch.nodes}
    parents = {c: p for p, kids in children.items() for c in kids}
    synth_conj: dict[int, str | None] = {}
    next_id = len(sketch.nodes)
    group_kind = {n.node_id: n.kind for n in sketch.nodes}

    for site in sketch.sites:
        if site.chosen == 0:
            continue
        target = site.candidates[site.chosen]
        movable = site.movable
        if site.kind == PP_ATTACH:
            old = parents[movable]
            children[old].remove(movable)
            children[target].append(movable)
            parents[movable] = target
            continue
        # coord-scope: pull the conjunct out of its default group
        group = parents[movable]
        children[group].remove(movable)
        conj = synth_conj.get(group)
        if group < len(sketch.nodes):
            conj = sketch.nodes[group].conj
        if len(children[group]) == 1:
            only = children[group][0]
            gp = parents[group]
            kids = children[gp]
            kids[kids.index(group)] = only
            parents[only] = gp
            del children[group]
        tp = parents[target]
        if group_kind.get(tp) == COORD_GROUP:
            children[tp].insert(children[tp].index(target) + 1, movable)
            parents[movable] = tp
        else:
            gid = next_id
            next_id += 1
            group_kind[gid] = COORD_GROUP
            synth_conj[gid] = conj
            children[gid] = [target, movable]
            kids = children[tp]
            kids[kids.index(target)] = gid
            parents[gid] = tp
            parents[target] = gid
            parents[movable] = gid

    site_by_movable = {s.movable: s for s in sketch.sites}
    by_id: dict[int, MatNode] = {}

    def build(nid: int) -> MatNode:
        site = site_by_movable.get(nid)
        ref = (site.site_id, site.chosen, len(site.candidates)) if site else None
        if nid < len(sketch.nodes):
            src = sketch.nodes[nid]
            node = MatNode(
                nid,
                src.kind,
                sketch.tokens[src.head] if src.head is not None else None,
                src.prep,
                src.rel,
                src.conj,
                src.role,
                src.opaque,
                src.etc,
                ref,
            )
        else:
            node = MatNode(
                nid, COORD_GROUP, None, None, None, synth_conj.get(nid),
                None, False, False, ref,
            )
        by_id[nid] = node
        node.children = [build(c) for c in children.get(nid, ())]
        return node

    root = build(sketch.root)
    return Materialized(root, by_id)


def _label(kind: str, node) -> str:
    if kind == PP_KIND:
        name = node.prep
    elif kind == REL_CLAUSE:
        name = node.rel
    elif kind == COORD_GROUP:
        name = node.conj or ","
    else:
        name = None
    return name


def node_label(sketch: Sketch, node_id: int) -> str:
    """Short display form of one node, e.g. NP(fish) or VP(catch)."""
    node = sketch.nodes[node_id]
    name = _label(node.kind, node)
    if name is None:
        name = sketch.tokens[node.head].lemma if node.head is not None else "?"
    return f"{node.kind}({name})"


def render_sketch(sketch: Sketch) -> str:
    """Indented one-node-per-line rendering of the materialized sketch."""
    mat = materialize(sketch)
    lines: list[str] = []

    def walk(node: MatNode, depth: int) -> None:
        name = _label(node.kind, node)
        if name is None:
            name = node.head.lemma if node.head is not None else "?"
        text = f"{'  ' * depth}{node.kind}({name})"
        if node.node_id == sketch.genus:
            text += " genus"
        if node.role == "object":
            text += " object"
        if node.role == "optional-object":
            text += " optional"
        if node.site_ref:
            sid, chosen, count = node.site_ref
            text += f" [site {sid}: chosen {chosen} of {count}]"
        if node.opaque:
            text += " opaque"
        if node.etc:
            text += " etc"
        if sketch.fallback and node.node_id == sketch.root:
            text += " fallback"
        lines.append(text)
        for child in node.children:
            walk(child, depth + 1)

    walk(mat.root, 0)
    return "\n".join(lines) + "\n"


def reattach(sketch: Sketch, site_id: int, candidate_index: int) -> Sketch:
    """A new sketch with one site's chosen candidate replaced."""
    for site in sketch.sites:
        if site.site_id == site_id:
            if not 0 <= candidate_index < len(site.candidates):
                raise NoSuchCandidate(
                    f"site {site_id} has {len(site.candidates)} candidates, "
                    f"asked for {candidate_index}"
                )
            new_sites = tuple(
                replace(s, chosen=candidate_index) if s.site_id == site_id else s
                for s in sketch.sites
            )
            return replace(sketch, sites=new_sites)
    raise NoSuchSite(f"sketch has no site {site_id}")


def apply_choices(sketch: Sketch, vector: tuple[int, ...]) -> Sketch:
    """A new sketch with every site's chosen index set from the vector."""
    if len(vector) != len(sketch.sites):
        raise NoSuchSite(
            f"choice vector has {len(vector)} entries for {len(sketch.sites)} sites"
        )
    new_sites = []
    for site, idx in zip(sketch.sites, vector):
        if not 0 <= idx < len(site.candidates):
            raise NoSuchCandidate(
                f"site {site.site_id} has {len(site.candidates)} candidates, "
                f"asked for {idx}"
            )
        new_sites.append(replace(site, chosen=idx))
    return replace(sketch, sites=tuple(new_sites))


def enumerate_attachments(sketch: Sketch) -> list[tuple[int, ...]]:
    """Every choice vector, lexicographic; a single empty vector if no sites."""
    ranges = [range(len(s.candidates)) for s in sketch.sites]
    return list(itertools.product(*ranges))
