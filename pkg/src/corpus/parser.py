"""Parse input files (JSON Lines corpora, stopword lists)."""
import json
import logging
from pathlib import Path
from typing import List, Set, Union

from pydantic import ValidationError

from ..errors import InputFormatError
from .models import RawDocument

logger = logging.getLogger(__name__)


def parse_document_file(file_path: Union[str, Path]) -> List[RawDocument]:
    """
    Parse a JSON Lines corpus.

    Each non-blank line is either
    ``{"id": str, "text": str, "labels": [str]?}`` or
    ``{"id": str, "sentences": [[str]], "labels": [str]?}``.

    Args:
        file_path: Path to the .jsonl file

    Returns:
        Documents in file order
    """
    path = Path(file_path)

    if not path.exists():
        raise FileNotFoundError(f"File not found: {file_path}")

    documents = []
    with open(path, "r", encoding="utf-8") as f:
        for line_number, line in enumerate(f, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                documents.append(RawDocument.model_validate(json.loads(line)))
            except (json.JSONDecodeError, ValidationError) as e:
                raise InputFormatError(f"{path}:{line_number}: {e}") from e

    logger.info(f"Parsed {len(documents)} documents from {path}")
    return documents


def parse_stopword_file(file_path: Union[str, Path], lowercase: bool = True) -> Set[str]:
    """Parse a stopword file (one term per line, '#' comments allowed)."""
    path = Path(file_path)

    if not path.exists():
        raise FileNotFoundError(f"File not found: {file_path}")

    stopwords = set()
    with open(path, "r", encoding="utf-8") as f:
        for line in f:
            term = line.strip()
            if term and not term.startswith("#"):
                stopwords.add(term.lower() if lowercase else term)

    return stopwords
