"""Exception types shared across the package."""


class LexbootError(Exception):
    """Base class for all errors raised by this package."""


class CorpusError(LexbootError):
    """Problem with a dictionary corpus file."""


class MalformedLine(CorpusError):
    """A corpus line does not have the required tab-separated shape."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class BadPos(CorpusError):
    """A corpus line carries an unknown part-of-speech code."""

    def __init__(self, line_no: int, code: str):
        super().__init__(f"line {line_no}: unknown pos code {code!r}")
        self.line_no = line_no
        self.code = code


class DuplicateSense(CorpusError):
    """Two corpus lines resolve to the same sense identity."""

    def __init__(self, line_no: int, sense: str):
        super().__init__(f"line {line_no}: duplicate sense {sense}")
        self.line_no = line_no


class SketchFallback(LexbootError):
    """Internal signal that chunking gave up on a definition."""


class NoSuchSite(LexbootError):
    """Reattachment referenced a site id the sketch does not have."""


class NoSuchCandidate(LexbootError):
    """Reattachment referenced a candidate index outside the site's range."""


class BadPassStamp(LexbootError):
    """A triple offered to merge() is not stamped with the successor pass."""


class ParseError(LexbootError):
    """A serialized knowledge-base dump failed to parse."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class UnknownSense(LexbootError):
    """A sense selector matched nothing in the corpus."""
