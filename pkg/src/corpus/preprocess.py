"""Sentence segmentation and tokenization."""
import re
import unicodedata
from typing import List

from .models import PreprocessConfig

# Split after a terminator followed by whitespace
_SENTENCE_BOUNDARY = re.compile(r"(?<=[.!?])\s+")


def segment_sentences(text: str) -> List[str]:
    """
    Split text into sentences.

    A boundary is a '.', '!' or '?' followed by whitespace; a trailing
    unterminated span becomes the last sentence.
    """
    stripped = text.strip()
    if not stripped:
        return []
    return [span for span in _SENTENCE_BOUNDARY.split(stripped) if span]


def _is_punctuation(char: str) -> bool:
    return unicodedata.category(char).startswith("P")


def strip_punctuation(token: str) -> str:
    """Remove leading and trailing Unicode punctuation."""
    start, end = 0, len(token)
    while start < end and _is_punctuation(token[start]):
        start += 1
    while end > start and _is_punctuation(token[end - 1]):
        end -= 1
    return token[start:end]


def tokenize(sentence: str, cfg: PreprocessConfig) -> List[str]:
    """
    Turn a sentence into terms.

    Args:
        sentence: Raw sentence text
        cfg: Preprocessing options (case folding, stopwords, min length)

    Returns:
        Terms in sentence order
    """
    terms = []
    for raw in sentence.split():
        term = strip_punctuation(raw)
        if not term:
            continue
        if cfg.lowercase:
            term = term.lower()
        if term in cfg.stopwords or len(term) < cfg.min_term_length:
            continue
        terms.append(term)
    return terms
