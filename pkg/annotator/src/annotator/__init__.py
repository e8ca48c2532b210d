"""Annotation pipeline emitting align-eval corpus JSONL."""

from .embed import HashedEmbedder, TransformersEmbedder, make_embedder
from .pipeline import (RawDataError, RawInstance, annotate, annotate_text,
                       load_raw, load_scus, metadata, write_corpus)
from .validate import ValidationReport, validate_against_engine

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
