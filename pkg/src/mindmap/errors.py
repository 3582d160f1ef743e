"""Exception types shared across the package."""


class MindMapError(Exception):
    """Base class for all errors raised by this package."""


class FormatError(MindMapError):
    """An input file violates its documented format.

    Carries the offending line number when one is known.
    """

    def __init__(self, message: str, line_number: int | None = None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class DuplicateWordError(MindMapError):
    """The same word appears twice where uniqueness is required."""

    def __init__(self, word: str):
        super().__init__(f"duplicate word: {word!r}")
        self.word = word


class DimensionError(MindMapError):
    """Vector dimensions do not match."""


class DegenerateVectorError(MindMapError):
    """A zero-norm vector where a direction is required."""


class OutOfVocabularyError(MindMapError):
    """Queried word is not in the embedding store."""

    def __init__(self, word: str):
        super().__init__(f"word not in vocabulary: {word!r}")
        self.word = word


class OutOfLexiconError(MindMapError):
    """Queried word has no entry in the phonetic lexicon."""

    def __init__(self, word: str):
        super().__init__(f"word not in lexicon: {word!r}")
        self.word = word


class MissingTagError(MindMapError):
    """Seed word lacks the POS or domain tag an operation needs."""

    def __init__(self, word: str, kind: str):
        super().__init__(f"word {word!r} has no {kind} tag")
        self.word = word
        self.kind = kind


class GraphStructureError(MindMapError):
    """Knowledge-graph file is not a forest (cycle or double parent)."""

    def __init__(self, message: str, vertex: str):
        super().__init__(f"{message}: {vertex!r}")
        self.vertex = vertex


class InvalidSeedError(MindMapError):
    """A seed word fails the vocabulary filter."""

    def __init__(self, word: str, reason: str):
        super().__init__(f"invalid seed {word!r}: {reason}")
        self.word = word
        self.reason = reason


class ConfigurationError(MindMapError):
    """A configuration or asset file is unusable."""
