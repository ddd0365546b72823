"""Encoded corpus and generator ground-truth files."""
import json
import logging
from pathlib import Path
from typing import Any, Dict, Optional, Union

import numpy as np

from ..config import settings
from ..corpus import Corpus, Document, Vocabulary
from ..errors import ModelFormatError
from ..sampler import GroundTruth
from .validator import CORPUS_SCHEMA, validate_document

logger = logging.getLogger(__name__)


def corpus_to_dict(corpus: Corpus, format_version: Optional[int] = None) -> Dict[str, Any]:
    return {
        "format_version": settings.corpus_format_version if format_version is None else format_version,
        "vocabulary": corpus.vocabulary.id_to_term,
        "documents": [
            {
                "id": doc.doc_id,
                "sentences": doc.sentences,
                "labels": sorted(doc.labels) if doc.labels is not None else None,
            }
            for doc in corpus.documents
        ],
        "dropped_documents": corpus.dropped_documents,
        "dropped_sentences": corpus.dropped_sentences,
        "skipped_tokens": corpus.skipped_tokens,
    }


def save_corpus(corpus: Corpus, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        json.dump(corpus_to_dict(corpus), f, ensure_ascii=False)
        f.write("\n")
    logger.info(f"Saved corpus with D={corpus.num_documents}, V={corpus.vocabulary.size} to {path}")
    return path


def load_corpus(path: Union[str, Path]) -> Corpus:
    """
    Load an encoded corpus file.

    Raises:
        FileNotFoundError: If the file does not exist
        ModelFormatError: On invalid JSON, schema violations or out-of-range ids
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Corpus file not found: {path}")

    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise ModelFormatError(f"{path}: invalid JSON: {e}") from e
    validate_document(data, CORPUS_SCHEMA)
    if data["format_version"] != settings.corpus_format_version:
        raise ModelFormatError(
            f"{path}: format_version {data['format_version']} != expected {settings.corpus_format_version}"
        )

    vocabulary = Vocabulary.from_terms(data["vocabulary"])
    documents = []
    for entry in data["documents"]:
        for sentence in entry["sentences"]:
            if any(term_id >= vocabulary.size for term_id in sentence):
                raise ModelFormatError(f"{path}: document {entry['id']!r} has a term id outside the vocabulary")
        labels = entry.get("labels")
        documents.append(Document(
            doc_id=entry["id"],
            sentences=entry["sentences"],
            labels=frozenset(labels) if labels is not None else None
        ))

    return Corpus(
        documents=documents,
        vocabulary=vocabulary,
        dropped_documents=data.get("dropped_documents", 0),
        dropped_sentences=data.get("dropped_sentences", 0),
        skipped_tokens=data.get("skipped_tokens", 0)
    )


def save_ground_truth(truth: GroundTruth, path: Union[str, Path]) -> Path:
    """Write generator latents (phi, theta, z) as JSON."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        json.dump(truth.to_dict(), f)
        f.write("\n")
    return path


def load_ground_truth(path: Union[str, Path]) -> GroundTruth:
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Ground-truth file not found: {path}")
    data = json.loads(path.read_text(encoding="utf-8"))
    return GroundTruth(phi=np.asarray(data["phi"]), theta=np.asarray(data["theta"]), z=data["z"])
