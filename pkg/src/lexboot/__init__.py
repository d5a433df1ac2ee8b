"""Bootstrapping of lexical relations from dictionary definitions.

The package turns a tab-separated dictionary corpus into a growing
knowledge base of labeled semantic relations (HYPERNYM, PART, PART-OF,
MATERIAL, INSTRUMENT).  Unambiguous structures are harvested first;
later passes reuse the accumulated knowledge to settle prepositional
attachment and coordination scope that a single pass cannot decide.
"""

from .bootstrap import (
    DEFAULT_CONFIG,
    PassReport,
    RunConfig,
    RunResult,
    STATUS_CONVERGED,
    STATUS_MAX_PASSES,
    run_pass,
    run_passes,
    run_until_converged,
)
from .corpus import Corpus, DictEntry, SenseId, load_corpus, load_corpus_path
from .errors import (
    BadPassStamp,
    BadPos,
    CorpusError,
    DuplicateSense,
    LexbootError,
    MalformedLine,
    NoSuchCandidate,
    NoSuchSite,
    ParseError,
    UnknownSense,
)
from .lkb import EMPTY, LkbSnapshot, deserialize, merge, serialize, similarity
from .patterns import (
    Decision,
    LABELS,
    RelationTriple,
    UnresolvedSite,
    run_patterns,
)
from .sketch import (
    AmbiguitySite,
    Sketch,
    SketchNode,
    apply_choices,
    enumerate_attachments,
    materialize,
    parse_definition,
    reattach,
    render_sketch,
)

__version__ = "0.1.0"

__all__ = [
    "AmbiguitySite",
    "BadPassStamp",
    "BadPos",
    "Corpus",
    "CorpusError",
    "Decision",
    "DEFAULT_CONFIG",
    "DictEntry",
    "DuplicateSense",
    "EMPTY",
    "LABELS",
    "LexbootError",
    "LkbSnapshot",
    "MalformedLine",
    "NoSuchCandidate",
    "NoSuchSite",
    "ParseError",
    "PassReport",
    "RelationTriple",
    "RunConfig",
    "RunResult",
    "STATUS_CONVERGED",
    "STATUS_MAX_PASSES",
    "SenseId",
    "Sketch",
    "SketchNode",
    "UnknownSense",
    "UnresolvedSite",
    "apply_choices",
    "deserialize",
    "enumerate_attachments",
    "load_corpus",
    "load_corpus_path",
    "materialize",
    "merge",
    "parse_definition",
    "reattach",
    "render_sketch",
    "run_pass",
    "run_passes",
    "run_patterns",
    "run_until_converged",
    "serialize",
    "similarity",
    "__version__",
]
