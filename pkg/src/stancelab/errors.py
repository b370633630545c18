"""Exception hierarchy shared across the toolkit.

The CLI maps these onto exit codes: DataError -> 2, NumericError -> 3,
anything argparse-shaped -> 1.
"""


class StancelabError(Exception):
    """Base class for all toolkit errors."""


class DataError(StancelabError):
    """Malformed or contract-violating input data (corpus, lexicon, files)."""


class CorpusError(DataError):
    pass


class LexiconError(DataError):
    pass


class EmbeddingFormatError(DataError):
    """Embedding file violates the binary layout."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (at byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class NumericError(StancelabError):
    """Non-finite values or shape mismatches inside the numeric core."""
