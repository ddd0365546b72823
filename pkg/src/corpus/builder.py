"""Encode raw documents into an id-encoded corpus."""
import logging
import statistics
from typing import Any, Dict, List, Sequence, Tuple

from ..errors import AllDocumentsEmpty, InputFormatError
from .models import Corpus, Document, PreprocessConfig, RawDocument, Vocabulary
from .preprocess import segment_sentences, tokenize

logger = logging.getLogger(__name__)


def document_terms(raw: RawDocument, cfg: PreprocessConfig) -> List[List[str]]:
    """Preprocessed term lists per sentence (empty sentences included)."""
    if cfg.pretokenized:
        if raw.sentences is None:
            raise InputFormatError(f"Document {raw.id!r} has no 'sentences' but input is pretokenized")
        return [[term for term in sentence if term] for sentence in raw.sentences]

    if raw.text is None:
        raise InputFormatError(f"Document {raw.id!r} has no 'text'; use --pretokenized for token lists")
    return [tokenize(sentence, cfg) for sentence in segment_sentences(raw.text)]


def build_corpus(raw_docs: Sequence[RawDocument], cfg: PreprocessConfig) -> Corpus:
    """
    Build a corpus and its vocabulary from raw documents.

    Ids are assigned in first-occurrence order. Empty sentences and empty
    documents are dropped and counted.

    Raises:
        AllDocumentsEmpty: If no document keeps a single token
    """
    vocabulary = Vocabulary()
    documents = []
    dropped_documents = 0
    dropped_sentences = 0

    for raw in raw_docs:
        sentences = []
        for terms in document_terms(raw, cfg):
            if not terms:
                dropped_sentences += 1
                continue
            sentences.append([vocabulary.add(term) for term in terms])

        if not sentences:
            dropped_documents += 1
            logger.warning(f"Document {raw.id!r} is empty after preprocessing; dropped")
            continue

        documents.append(Document(doc_id=raw.id, sentences=sentences, labels=raw.label_set))

    if not documents:
        raise AllDocumentsEmpty(f"All {len(raw_docs)} documents are empty after preprocessing")

    vocabulary.freeze()
    corpus = Corpus(
        documents=documents,
        vocabulary=vocabulary,
        dropped_documents=dropped_documents,
        dropped_sentences=dropped_sentences
    )
    logger.info(
        f"Built corpus: D={corpus.num_documents}, V={vocabulary.size}, "
        f"dropped {dropped_documents} documents and {dropped_sentences} sentences"
    )
    return corpus


def encode_with_vocabulary(
    raw: RawDocument,
    vocabulary: Vocabulary,
    cfg: PreprocessConfig
) -> Tuple[Document, int]:
    """
    Encode a document against a frozen vocabulary.

    Returns:
        The document (possibly with zero sentences) and the number of
        out-of-vocabulary tokens skipped
    """
    sentences = []
    skipped = 0
    for terms in document_terms(raw, cfg):
        ids = []
        for term in terms:
            term_id = vocabulary.get(term)
            if term_id is None:
                skipped += 1
            else:
                ids.append(term_id)
        if ids:
            sentences.append(ids)

    return Document(doc_id=raw.id, sentences=sentences, labels=raw.label_set), skipped


def encode_corpus_with_vocabulary(
    raw_docs: Sequence[RawDocument],
    vocabulary: Vocabulary,
    cfg: PreprocessConfig
) -> Corpus:
    """Encode held-out documents; empty documents are kept."""
    documents = []
    skipped_total = 0
    for raw in raw_docs:
        doc, skipped = encode_with_vocabulary(raw, vocabulary, cfg)
        documents.append(doc)
        skipped_total += skipped

    if skipped_total:
        logger.info(f"Skipped {skipped_total} out-of-vocabulary tokens")
    return Corpus(documents=documents, vocabulary=vocabulary, skipped_tokens=skipped_total)


def decode_document(doc: Document, vocabulary: Vocabulary) -> List[List[str]]:
    """Map ids back to terms."""
    return [[vocabulary.id_to_term[term_id] for term_id in sentence] for sentence in doc.sentences]


def corpus_statistics(corpus: Corpus) -> Dict[str, Any]:
    """Summary row describing the corpus."""
    sentence_lengths = [len(s) for doc in corpus.documents for s in doc.sentences]
    return {
        "documents": corpus.num_documents,
        "vocabulary": corpus.vocabulary.size,
        "sentences": len(sentence_lengths),
        "tokens": sum(sentence_lengths),
        "classes": len({label for doc in corpus.documents for label in (doc.labels or ())}),
        "mean_sentence_length": statistics.fmean(sentence_lengths) if sentence_lengths else 0.0,
        "mean_sentences_per_document": (
            len(sentence_lengths) / corpus.num_documents if corpus.num_documents else 0.0
        ),
    }
