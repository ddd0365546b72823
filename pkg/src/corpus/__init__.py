"""Corpus ingestion: segmentation, tokenization, vocabulary and encoding."""
from .builder import (
    build_corpus,
    corpus_statistics,
    decode_document,
    encode_corpus_with_vocabulary,
    encode_with_vocabulary,
)
from .models import Corpus, Document, PreprocessConfig, RawDocument, Vocabulary
from .parser import parse_document_file, parse_stopword_file
from .preprocess import segment_sentences, tokenize

__all__ = [
    "Corpus",
    "Document",
    "PreprocessConfig",
    "RawDocument",
    "Vocabulary",
    "build_corpus",
    "corpus_statistics",
    "decode_document",
    "encode_corpus_with_vocabulary",
    "encode_with_vocabulary",
    "parse_document_file",
    "parse_stopword_file",
    "segment_sentences",
    "tokenize",
]
