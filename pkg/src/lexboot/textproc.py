"""Tokenization and rule-based lemmatization for definition text.

Dictionary definitions are written in a rigid sublanguage, so a closed
function-word lexicon plus a handful of positional defaults is enough to
categorize tokens without a statistical tagger.  Lemmatization is likewise
table-driven: a small irregular table and affix rules chosen to be idempotent
(lemmatizing a lemma returns it unchanged).
"""

from __future__ import annotations

from dataclasses import dataclass

DET = "det"
ADJ = "adj"
NOUN = "noun"
VERB = "verb"
GERUND = "gerund"
PREP = "prep"
CONJ = "conj"
REL_PRON = "rel-pron"
PUNCT = "punct"
OTHER = "other"

# categories whose lemmas count as content for definition-text overlap
CONTENT_CATS = frozenset({ADJ, NOUN, VERB, GERUND})

DETERMINERS = frozenset({"a", "an", "the", "its", "their", "every", "each"})

PREPOSITIONS = frozenset({
    "of", "with", "for", "in", "on", "to", "from", "by", "at", "as",
    "into", "onto", "through", "over", "under", "near", "between",
})

# two-word sequences the chunker reads as a single preposition
COMPOUND_PREPS = frozenset({("close", "to"), ("next", "to"), ("according", "to")})

CONJUNCTIONS = frozenset({"and", "or"})

REL_PRONOUNS = frozenset({"that", "which", "who"})

# period-final forms kept as single tokens
ABBREVIATIONS = ("usu.", "etc.", "esp.")

PUNCT_CHARS = frozenset(",;:().")

IRREGULAR_PLURALS = {
    "leaves": "leaf",
    "men": "man",
    "teeth": "tooth",
    "feet": "foot",
    "geese": "goose",
    "mice": "mouse",
    "women": "woman",
    "children": "child",
}

# -ing words that are plain nouns, never gerunds
NON_GERUND_ING = frozenset({
    "thing", "something", "anything", "nothing", "everything",
    "king", "ring", "wing", "string", "spring", "sting",
    "evening", "morning", "ceiling", "during",
})

# gerunds whose stem doubles a final consonant
GERUND_DOUBLED = {
    "running": "run", "digging": "dig", "cutting": "cut", "sitting": "sit",
    "swimming": "swim", "getting": "get", "putting": "put", "hitting": "hit",
    "stopping": "stop", "wrapping": "wrap",
}

# gerunds whose stem restores a final e
GERUND_E_FINAL = {
    "giving": "give", "making": "make", "taking": "take", "using": "use",
    "having": "have", "living": "live", "coming": "come", "writing": "write",
    "moving": "move", "producing": "produce", "baking": "bake",
    "serving": "serve", "riding": "ride",
}

# -ed participles used as premodifiers, with stems the plain rule misses
PARTICIPLE_STEMS = {
    "used": "use", "curved": "curve", "dried": "dry", "shaped": "shape",
    "colored": "color", "coloured": "colour", "carved": "carve",
    "baked": "bake", "pointed": "point",
}

VERB_IRREGULARS = {
    "has": "have", "is": "be", "are": "be", "was": "be", "were": "be",
    "does": "do", "goes": "go", "grew": "grow", "made": "make",
}

_VOWELS = set("aeiouy")


@dataclass(frozen=True)
class Token:
    """One token of a definition: surface form, lemma, category, char span."""

    surface: str
    lemma: str
    cat: str
    span: tuple[int, int]


def _has_vowel(word: str) -> bool:
    return any(ch in _VOWELS for ch in word)


def _is_gerund_form(word: str) -> bool:
    if not word.endswith("ing") or len(word) < 5:
        return False
    if word in NON_GERUND_ING:
        return False
    return _has_vowel(word[:-3])


def _noun_lemma(word: str) -> str:
    if word in IRREGULAR_PLURALS:
        return IRREGULAR_PLURALS[word]
    if word.endswith("ies") and len(word) > 4:
        return word[:-3] + "y"
    if word.endswith(("ses", "xes", "zes", "ches", "shes")):
        return word[:-2]
    if word.endswith("s") and len(word) > 3 and not word.endswith(("ss", "us", "is")):
        return word[:-1]
    return word


def _verb_lemma(word: str) -> str:
    if word in VERB_IRREGULARS:
        return VERB_IRREGULARS[word]
    if _is_gerund_form(word):
        if word in GERUND_DOUBLED:
            return GERUND_DOUBLED[word]
        if word in GERUND_E_FINAL:
            return GERUND_E_FINAL[word]
        return word[:-3]
    return _noun_lemma(word)


def _adj_lemma(word: str) -> str:
    if word in PARTICIPLE_STEMS:
        return PARTICIPLE_STEMS[word]
    if word.endswith("ied") and len(word) > 4:
        return word[:-3] + "y"
    if word.endswith("ed") and len(word) > 4:
        stem = word[:-2]
        # keep words like "agreed" whole; stripping would not be idempotent
        if not stem.endswith(("e", "ed")):
            return stem
    return word


def lemmatize(surface: str, cat: str) -> str:
    """Lowercase and strip inflection according to the token category.

    Idempotent for every category: lemmatize(lemmatize(w, c), c) equals
    lemmatize(w, c).
    """
    word = surface.lower()
    if cat == NOUN:
        return _noun_lemma(word)
    if cat in (VERB, GERUND):
        return _verb_lemma(word)
    if cat == ADJ:
        return _adj_lemma(word)
    return word


def _scan(text: str) -> list[tuple[str, int, int]]:
    """Split text into (surface, start, end) pieces; punctuation stands alone."""
    pieces = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        matched = False
        for abbr in ABBREVIATIONS:
            end = i + len(abbr)
            if text[i:end].lower() == abbr and (end >= n or not text[end].isalnum()):
                pieces.append((text[i:end], i, end))
                i = end
                matched = True
                break
        if matched:
            continue
        if ch in PUNCT_CHARS:
            j = i + 1
            if ch == ".":
                while j < n and text[j] == ".":
                    j += 1
            pieces.append((text[i:j], i, j))
            i = j
            continue
        j = i
        while j < n and not text[j].isspace() and text[j] not in PUNCT_CHARS:
            j += 1
        pieces.append((text[i:j], i, j))
        i = j
    return pieces


def _category(surface: str, index: int, pieces: list[tuple[str, int, int]]) -> str:
    word = surface.lower()
    if word == "usu." or word == "esp.":
        return OTHER
    if word == "etc." or all(ch in PUNCT_CHARS for ch in word):
        return PUNCT
    if word in DETERMINERS:
        return DET
    if word in PREPOSITIONS:
        return PREP
    if word in CONJUNCTIONS:
        return CONJ
    if word in REL_PRONOUNS:
        return REL_PRON
    if not any(ch.isalpha() for ch in word):
        return OTHER
    if index > 0 and pieces[index - 1][0].lower() in REL_PRONOUNS:
        return VERB
    if index == 1 and pieces[0][0].lower() == "to":
        return VERB
    if _is_gerund_form(word):
        return GERUND
    if word in PARTICIPLE_STEMS or (word.endswith("ed") and len(word) > 4):
        return ADJ
    return NOUN


def tokenize(definition: str) -> list[Token]:
    """Tokenize one definition into categorized, lemmatized tokens."""
    pieces = _scan(definition)
    tokens = []
    for k, (surface, start, end) in enumerate(pieces):
        cat = _category(surface, k, pieces)
        if cat in (PUNCT, OTHER):
            lemma = surface.lower()
        else:
            lemma = lemmatize(surface, cat)
        tokens.append(Token(surface, lemma, cat, (start, end)))
    return tokens


def content_lemmas(tokens: list[Token]) -> set[str]:
    """Content-word lemma set of a token sequence (nouns, verbs, gerunds, adjectives)."""
    return {t.lemma for t in tokens if t.cat in CONTENT_CATS}
