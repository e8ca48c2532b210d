"""Exception types shared across the package.

The CLI maps ValidationError to exit code 1 and OSError to exit code 2.
"""


class ValidationError(Exception):
    """An input violates a schema rule or an analysis precondition."""


class CorpusError(ValidationError):
    """Malformed or invariant-violating corpus JSONL."""


class ScoreMatrixError(ValidationError):
    """Malformed score CSV."""


class EmbeddingError(ValidationError):
    """Missing, mismatched, or degenerate token embeddings."""


class AnalysisError(ValidationError):
    """An analysis was asked for data it cannot be computed on."""
