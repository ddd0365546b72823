"""Choosing the number of topics by cross-validated held-out perplexity."""
import logging
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from ..corpus import Corpus
from ..sampler import Granularity, Hyperparams, train
from .perplexity import perplexity

logger = logging.getLogger(__name__)


@dataclass
class TopicSelectionReport:
    """Mean held-out perplexity per candidate K."""
    perplexities: Dict[int, float] = field(default_factory=dict)
    best_topics: Optional[int] = None
    folds: int = 5

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["perplexities"] = {str(k): v for k, v in self.perplexities.items()}
        return data


def kfold_indices(n: int, folds: int, seed: int) -> List[np.ndarray]:
    """Seeded shuffle split into contiguous, near-equal blocks."""
    if folds < 2 or folds > n:
        raise ValueError(f"need 2 <= folds <= {n}, got {folds}")
    order = np.random.default_rng(seed).permutation(n)
    return np.array_split(order, folds)


def select_topic_count(
    corpus: Corpus,
    candidates: Sequence[int],
    granularity: Granularity = Granularity.SENTENCE,
    alpha: Optional[float] = None,
    beta: Optional[float] = None,
    folds: int = 5,
    iterations: int = 50,
    fold_in_iterations: int = 20,
    seed: int = 0
) -> TopicSelectionReport:
    """
    Grid-search K by k-fold held-out perplexity on the training corpus.

    alpha and beta default to 1/K for each candidate. Ties go to the
    smaller K.
    """
    blocks = kfold_indices(corpus.num_documents, folds, seed)
    report = TopicSelectionReport(folds=folds)

    for topics in sorted(set(candidates)):
        hyper = Hyperparams(K=topics, alpha=alpha, beta=beta, granularity=granularity, seed=seed)
        scores = []
        for fold, heldout_idx in enumerate(blocks):
            train_idx = np.concatenate([b for i, b in enumerate(blocks) if i != fold])
            model, _ = train(corpus.subset(train_idx), hyper, iterations)
            result = perplexity(model, corpus.subset(heldout_idx), fold_in_iterations, seed)
            scores.append(result.perplexity)
        report.perplexities[topics] = float(np.mean(scores))
        logger.info(f"K={topics}: mean held-out perplexity {report.perplexities[topics]:.4f}")

    report.best_topics = min(report.perplexities, key=lambda k: (report.perplexities[k], k))
    return report
