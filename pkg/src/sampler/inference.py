"""Fold-in inference of topic mixtures for unseen documents."""
import hashlib
import logging
from typing import Optional, Union

import numpy as np

from ..corpus import Document
from .gibbs import estimate_theta
from .math_utils import sample_categorical_log
from .state import document_segments
from .types import TopicDistribution, TrainedModel

logger = logging.getLogger(__name__)

Seed = Union[int, np.random.SeedSequence]


def document_seed(seed: int, doc_id: str) -> np.random.SeedSequence:
    """Per-document stream derived from the run seed and the document id."""
    digest = hashlib.sha256(doc_id.encode("utf-8")).hexdigest()
    return np.random.SeedSequence([seed, int(digest[:16], 16)])


def infer_theta(
    model: TrainedModel,
    doc: Document,
    iterations: int,
    seed: Seed,
    log_phi: Optional[np.ndarray] = None
) -> TopicDistribution:
    """
    Estimate the topic mixture of a held-out document by fold-in sampling.

    Phi stays fixed: only the document's segment assignments and its
    doc-topic counts are resampled. With frozen topic-term statistics the
    segment factor is prod_w phi[k, w] ** n_s^(w). Theta is averaged over
    the last quarter of the sweeps.

    Args:
        model: Trained model
        doc: Document encoded with the model vocabulary
        iterations: Number of fold-in sweeps (>= 1)
        seed: Seed or SeedSequence for this document's stream
        log_phi: Precomputed log(model.phi), reused across documents

    Returns:
        TopicDistribution; uniform with ``empty=True`` for a document without tokens
    """
    if iterations < 1:
        raise ValueError(f"iterations must be >= 1, got {iterations}")

    hyper = model.hyperparams
    K = hyper.K
    segments = document_segments(doc, hyper.granularity)
    if not segments:
        logger.warning(f"Document {doc.doc_id!r} has no in-vocabulary tokens; returning uniform theta")
        return TopicDistribution(theta=np.full(K, 1.0 / K), empty=True)

    if log_phi is None:
        log_phi = np.log(model.phi)
    # S x K log-likelihood of every segment under every topic
    segment_loglik = np.stack([log_phi[:, seg.words] @ seg.freqs for seg in segments])

    rng = np.random.default_rng(seed)
    z = rng.integers(0, K, size=len(segments))
    doc_topic = np.bincount(z, minlength=K).astype(np.int64)

    keep = max(1, iterations // 4)
    samples = []
    for iteration in range(1, iterations + 1):
        for s in range(len(segments)):
            doc_topic[z[s]] -= 1
            k = sample_categorical_log(np.log(doc_topic + hyper.alpha) + segment_loglik[s], rng)
            z[s] = k
            doc_topic[k] += 1
        if iteration > iterations - keep:
            samples.append(estimate_theta(doc_topic, hyper.alpha).theta)

    return TopicDistribution(theta=np.mean(samples, axis=0))
