"""Collapsed joint log-probability, used as a brute-force check of the sampler."""
from typing import Optional, Sequence

import numpy as np
from scipy.special import gammaln

from .state import count_assignments
from .types import SamplerState


def log_delta(x: np.ndarray) -> np.ndarray:
    """log of the multivariate beta function along the last axis."""
    return gammaln(x).sum(axis=-1) - gammaln(x.sum(axis=-1))


def log_joint(state: SamplerState, z: Optional[Sequence[np.ndarray]] = None) -> float:
    """
    log p(w, z | alpha, beta) with theta and phi integrated out.

    Counts are rebuilt from the assignments (state.z unless `z` is given),
    never read from the maintained state, so this stays an independent check.
    """
    hyper = state.hyper
    K, V = hyper.K, state.vocab_size
    assignments = state.z if z is None else z
    topic_term, _, doc_topic, _ = count_assignments(assignments, state.segments, K, V)

    topic_part = log_delta(topic_term + hyper.beta).sum() - K * log_delta(np.full(V, hyper.beta))
    doc_part = log_delta(doc_topic + hyper.alpha).sum() - len(state.segments) * log_delta(
        np.full(K, hyper.alpha)
    )
    return float(topic_part + doc_part)
