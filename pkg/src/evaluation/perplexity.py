"""Held-out and training perplexity."""
import logging
import math
from dataclasses import asdict, dataclass
from typing import Any, Dict, List, Sequence

import numpy as np

from ..corpus import Corpus
from ..errors import NoTokens
from ..sampler import SamplerState, TrainedModel, document_seed, estimate_phi, estimate_theta_matrix, infer_theta

logger = logging.getLogger(__name__)


@dataclass
class PerplexityReport:
    """Perplexity over the in-vocabulary held-out tokens."""
    perplexity: float
    total_tokens: int
    skipped_tokens: int

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def _flat_tokens(sentences: Sequence[Sequence[int]]) -> np.ndarray:
    return np.fromiter((t for sentence in sentences for t in sentence), dtype=np.int64)


def perplexity_from_thetas(
    phi: np.ndarray,
    corpus: Corpus,
    thetas: np.ndarray,
    skipped_tokens: int = 0
) -> PerplexityReport:
    """
    exp(-sum log p(w) / N) with p(w) = sum_k theta[d, k] phi[k, w].

    The log-likelihood sum is exactly rounded, so document order does not
    change the result.

    Raises:
        NoTokens: If the corpus holds no tokens
    """
    log_likelihoods: List[float] = []
    for doc, theta in zip(corpus.documents, thetas):
        tokens = _flat_tokens(doc.sentences)
        if tokens.size:
            log_likelihoods.extend(np.log(theta @ phi[:, tokens]).tolist())

    if not log_likelihoods:
        raise NoTokens(f"No in-vocabulary tokens to evaluate ({skipped_tokens} skipped)")

    value = math.exp(-math.fsum(log_likelihoods) / len(log_likelihoods))
    return PerplexityReport(
        perplexity=value,
        total_tokens=len(log_likelihoods),
        skipped_tokens=skipped_tokens
    )


def perplexity(
    model: TrainedModel,
    heldout: Corpus,
    fold_in_iterations: int,
    seed: int
) -> PerplexityReport:
    """
    Held-out perplexity with theta estimated by fold-in for every document.

    Out-of-vocabulary tokens were already skipped when the held-out corpus
    was encoded; their count is carried into the report.
    """
    log_phi = np.log(model.phi)
    thetas = np.stack([
        infer_theta(model, doc, fold_in_iterations, document_seed(seed, doc.doc_id), log_phi=log_phi).theta
        for doc in heldout.documents
    ]) if heldout.documents else np.empty((0, model.K))

    report = perplexity_from_thetas(model.phi, heldout, thetas, skipped_tokens=heldout.skipped_tokens)
    logger.info(
        f"Held-out perplexity {report.perplexity:.4f} over {report.total_tokens} tokens "
        f"({report.skipped_tokens} OOV skipped)"
    )
    return report


def training_perplexity(state: SamplerState) -> float:
    """Perplexity of the training tokens under the current point estimates."""
    phi = estimate_phi(state)
    thetas = estimate_theta_matrix(state)
    docs, words, freqs = state.token_index()

    probs = np.einsum("ik,ki->i", thetas[docs], phi[:, words])
    return math.exp(-float(freqs @ np.log(probs)) / int(freqs.sum()))
