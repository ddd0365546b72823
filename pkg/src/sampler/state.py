"""Segment construction, count bookkeeping and state initialization."""
import logging
from typing import List, Sequence, Tuple

import numpy as np

from ..corpus import Corpus, Document
from ..errors import NumericalError
from .types import Granularity, Hyperparams, SamplerState, Segment

logger = logging.getLogger(__name__)

Counts = Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]


def document_segments(doc: Document, granularity: Granularity) -> List[Segment]:
    """
    Split a document into topic-sharing segments.

    Sentence granularity keeps sentences whole; word granularity makes every
    token its own segment, which turns the sampler into standard LDA.
    """
    if granularity == Granularity.SENTENCE:
        return [Segment.from_tokens(sentence) for sentence in doc.sentences]
    return [Segment.from_tokens([token]) for sentence in doc.sentences for token in sentence]


def build_segments(corpus: Corpus, granularity: Granularity) -> List[List[Segment]]:
    """Segments of every document, in corpus order."""
    return [document_segments(doc, granularity) for doc in corpus.documents]


def count_assignments(
    z: Sequence[np.ndarray],
    segments: Sequence[Sequence[Segment]],
    K: int,
    V: int
) -> Counts:
    """
    Build topic_term, topic_total, doc_topic and doc_total from scratch.

    Returns:
        (topic_term K x V, topic_total K, doc_topic D x K, doc_total D)
    """
    D = len(segments)
    topic_term = np.zeros((K, V), dtype=np.int64)
    doc_topic = np.zeros((D, K), dtype=np.int64)
    doc_total = np.zeros(D, dtype=np.int64)

    for d, (doc_segments, z_d) in enumerate(zip(segments, z)):
        for seg, k in zip(doc_segments, z_d):
            topic_term[k, seg.words] += seg.freqs
            doc_topic[d, k] += 1
        doc_total[d] = len(doc_segments)

    topic_total = topic_term.sum(axis=1)
    return topic_term, topic_total, doc_topic, doc_total


def init_state(corpus: Corpus, hyper: Hyperparams) -> SamplerState:
    """
    Assign every segment a uniformly random topic and build the counts.

    The generator stream is seeded from hyper.seed; the same stream then
    drives every later sweep of the chain.
    """
    rng = np.random.default_rng(np.random.SeedSequence(hyper.seed))
    segments = build_segments(corpus, hyper.granularity)
    z = [rng.integers(0, hyper.K, size=len(doc_segments), dtype=np.int64) for doc_segments in segments]

    topic_term, topic_total, doc_topic, doc_total = count_assignments(
        z, segments, hyper.K, corpus.vocabulary.size
    )
    n_segments = int(doc_total.sum())
    logger.debug(
        f"Initialized {hyper.granularity.value} state: {n_segments} segments, "
        f"K={hyper.K}, seed={hyper.seed}"
    )
    return SamplerState(
        hyper=hyper,
        segments=segments,
        z=z,
        topic_term=topic_term,
        topic_total=topic_total,
        doc_topic=doc_topic,
        doc_total=doc_total,
        rng=rng
    )


def check_consistency(state: SamplerState) -> None:
    """
    Verify maintained counts against counts rebuilt from z.

    Raises:
        NumericalError: If any count structure drifted or went negative
    """
    rebuilt = count_assignments(state.z, state.segments, state.hyper.K, state.vocab_size)
    maintained = (state.topic_term, state.topic_total, state.doc_topic, state.doc_total)
    names = ("topic_term", "topic_total", "doc_topic", "doc_total")

    for name, expected, actual in zip(names, rebuilt, maintained):
        if not np.array_equal(expected, actual):
            raise NumericalError(f"{name} is inconsistent with the topic assignments")
        if (actual < 0).any():
            raise NumericalError(f"{name} has negative counts")
