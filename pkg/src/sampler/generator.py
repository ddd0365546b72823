"""Synthetic corpora drawn from the sentence-level generative process."""
import logging
from typing import Tuple

import numpy as np

from ..corpus import Corpus, Document, Vocabulary
from .types import GeneratorConfig, GroundTruth, Hyperparams

logger = logging.getLogger(__name__)


def block_topics(K: int, V: int, leak: float = 0.0) -> np.ndarray:
    """
    Well-separated topics: topic k is uniform over its own block of V // K terms.

    Args:
        K: Number of topics
        V: Vocabulary size (>= K)
        leak: Probability mass spread uniformly over the other terms
    """
    if V < K:
        raise ValueError(f"need V >= K, got V={V}, K={K}")
    if not 0.0 <= leak < 1.0:
        raise ValueError(f"leak must be in [0, 1), got {leak}")

    block = V // K
    phi = np.zeros((K, V))
    for k in range(K):
        phi[k, k * block:(k + 1) * block] = (1.0 - leak) / block
        outside = phi[k] == 0
        if leak > 0:
            phi[k, outside] = leak / outside.sum()
    return phi / phi.sum(axis=1, keepdims=True)


def _positive_poisson(rng: np.random.Generator, lam: float) -> int:
    """Poisson draw, redrawn while zero."""
    while True:
        value = int(rng.poisson(lam))
        if value > 0:
            return value


def generate_corpus(cfg: GeneratorConfig, hyper: Hyperparams) -> Tuple[Corpus, GroundTruth]:
    """
    Draw a corpus: per document theta ~ Dir(alpha) and S_d sentences; per
    sentence a length, one topic z ~ theta and its words ~ phi_z.

    Documents are labelled ``topic<k>`` with their most frequent true
    sentence topic (ties to the smaller id).

    Returns:
        The corpus (terms named ``w0000``...) and the ground truth
    """
    rng = np.random.default_rng(np.random.SeedSequence(hyper.seed))
    K, V = hyper.K, cfg.V

    if cfg.true_phi is not None:
        phi = np.asarray(cfg.true_phi, dtype=np.float64)
        if phi.shape[0] != K:
            raise ValueError(f"true_phi has {phi.shape[0]} topics, hyperparams say K={K}")
    else:
        phi = rng.dirichlet(np.full(V, hyper.beta), size=K)

    vocabulary = Vocabulary.from_terms(f"w{i:04d}" for i in range(V))
    thetas = np.empty((cfg.D, K))
    documents = []
    true_z = []

    for d in range(cfg.D):
        theta = rng.dirichlet(np.full(K, hyper.alpha))
        thetas[d] = theta
        sentences = []
        z_d = []
        for _ in range(_positive_poisson(rng, cfg.xi_sentences)):
            length = _positive_poisson(rng, cfg.xi_words)
            k = int(rng.choice(K, p=theta))
            sentences.append(rng.choice(V, size=length, p=phi[k]).tolist())
            z_d.append(k)

        dominant = int(np.argmax(np.bincount(z_d, minlength=K)))
        documents.append(Document(
            doc_id=f"doc{d:05d}",
            sentences=sentences,
            labels=frozenset({f"topic{dominant}"})
        ))
        true_z.append(z_d)

    corpus = Corpus(documents=documents, vocabulary=vocabulary)
    logger.info(
        f"Generated corpus: D={cfg.D}, V={V}, K={K}, "
        f"{corpus.num_sentences} sentences, {corpus.num_tokens} tokens"
    )
    return corpus, GroundTruth(phi=phi, theta=thetas, z=true_z)
