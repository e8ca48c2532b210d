"""Regex word tokenizer with character offsets and sentence segmentation."""

import re
from dataclasses import dataclass

_TOKEN_RE = re.compile(
    r"""
    \d+(?:[.,]\d+)*%?            # numbers: 1995, 3.5, 12,000, 40%
    | [A-Za-z]+(?:\.[A-Za-z]+)+\.?   # abbreviations: U.S., U.N.
    | [A-Za-z]+(?:['’][A-Za-z]+)?  # words, contractions: don't
    | [^\w\s]                    # single punctuation mark
    """,
    re.VERBOSE,
)

_SENTENCE_FINAL = {".", "!", "?"}


@dataclass(frozen=True)
class Span:
    """A raw token: surface text plus [start, end) character offsets."""

    text: str
    start: int
    end: int


def tokenize(text):
    """Non-overlapping, ordered token spans."""
    return [Span(m.group(), m.start(), m.end())
            for m in _TOKEN_RE.finditer(text)]


def sentences(spans):
    """Split a token-span list into sentences at final punctuation."""
    out = []
    current = []
    for span in spans:
        current.append(span)
        if span.text in _SENTENCE_FINAL:
            out.append(current)
            current = []
    if current:
        out.append(current)
    return out
