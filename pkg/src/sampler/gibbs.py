"""Collapsed Gibbs sampling over segment topic assignments."""
import logging
import time
from typing import Callable, Optional, Sequence, Tuple

import numpy as np

from ..corpus import Corpus
from .math_utils import log_rising_factorial, log_rising_factorial_array, sample_categorical_log
from .state import init_state
from .types import Hyperparams, SamplerState, TopicDistribution, TrainedModel

logger = logging.getLogger(__name__)

# hook(iteration, seconds, perplexity)
DiagnosticsHook = Callable[[int, float, Optional[float]], None]


def log_segment_factor(
    state: SamplerState,
    tokens: Sequence[int],
    k: int,
    excluded: bool = True
) -> float:
    """
    Log of the topic-term factor of the full conditional for one segment.

    Sum over distinct words w of log rising factorial(n_k^(w) + beta, n_s^(w))
    minus log rising factorial(n_k + V beta, N_s), all with the segment's own
    tokens excluded from the counts.

    Args:
        state: Sampler state
        tokens: Token ids of the segment (order is irrelevant)
        k: Topic id
        excluded: True if the segment is already removed from the counts;
            False if its tokens are currently counted under topic k
    """
    if len(tokens) == 0:
        return 0.0

    beta = state.hyper.beta
    words, freqs = np.unique(np.asarray(tokens, dtype=np.int64), return_counts=True)
    counts = state.topic_term[k, words].astype(np.int64)
    total = int(state.topic_total[k])
    length = int(freqs.sum())
    if not excluded:
        counts = counts - freqs
        total -= length

    numerator = sum(
        log_rising_factorial(float(n) + beta, int(f)) for n, f in zip(counts, freqs)
    )
    denominator = log_rising_factorial(total + state.vocab_size * beta, length)
    return numerator - denominator


def full_conditional(state: SamplerState, d: int, s: int) -> np.ndarray:
    """
    Unnormalized log probabilities of every topic for segment s of document d.

    weight[k] = log(n_{d,k} + alpha) + segment factor for topic k. The
    segment must already be removed from the counts.
    """
    hyper = state.hyper
    seg = state.segments[d][s]

    term_counts = state.topic_term[:, seg.words] + hyper.beta
    numerator = log_rising_factorial_array(term_counts, seg.freqs).sum(axis=1)
    denominator = log_rising_factorial_array(
        state.topic_total + state.vocab_size * hyper.beta, seg.length
    )
    return np.log(state.doc_topic[d] + hyper.alpha) + numerator - denominator


def _remove(state: SamplerState, d: int, s: int, k: int) -> None:
    seg = state.segments[d][s]
    state.topic_term[k, seg.words] -= seg.freqs
    state.topic_total[k] -= seg.length
    state.doc_topic[d, k] -= 1


def _add(state: SamplerState, d: int, s: int, k: int) -> None:
    seg = state.segments[d][s]
    state.topic_term[k, seg.words] += seg.freqs
    state.topic_total[k] += seg.length
    state.doc_topic[d, k] += 1


def gibbs_sweep(state: SamplerState) -> SamplerState:
    """One full pass over documents and their segments, in corpus order."""
    rng = state.rng
    for d, z_d in enumerate(state.z):
        for s in range(len(z_d)):
            _remove(state, d, s, int(z_d[s]))
            k = sample_categorical_log(full_conditional(state, d, s), rng)
            z_d[s] = k
            _add(state, d, s, k)
    return state


def estimate_phi(state: SamplerState) -> np.ndarray:
    """Posterior-mean topic-term matrix (n_k^(w) + beta) / (n_k + V beta)."""
    beta = state.hyper.beta
    return (state.topic_term + beta) / (state.topic_total[:, None] + state.vocab_size * beta)


def estimate_theta(doc_topic_counts: np.ndarray, alpha: float) -> TopicDistribution:
    """Posterior-mean topic mixture (n_{d,k} + alpha) / (n_d + K alpha)."""
    counts = np.asarray(doc_topic_counts, dtype=np.float64)
    theta = (counts + alpha) / (counts.sum() + len(counts) * alpha)
    return TopicDistribution(theta=theta, empty=bool(counts.sum() == 0))


def estimate_theta_matrix(state: SamplerState) -> np.ndarray:
    """estimate_theta for every training document, as a D x K matrix."""
    alpha = state.hyper.alpha
    return (state.doc_topic + alpha) / (state.doc_total[:, None] + state.num_topics * alpha)


def to_model(state: SamplerState, corpus: Corpus, format_version: int = 1) -> TrainedModel:
    """Freeze a state into a TrainedModel."""
    return TrainedModel(
        phi=estimate_phi(state),
        hyperparams=state.hyper,
        vocabulary=corpus.vocabulary,
        format_version=format_version
    )


def train(
    corpus: Corpus,
    hyper: Hyperparams,
    iterations: int,
    hook: Optional[DiagnosticsHook] = None,
    evaluate: Optional[Callable[[SamplerState], float]] = None,
    eval_every: int = 1,
    on_sweep: Optional[Callable[[int, SamplerState], None]] = None,
    format_version: int = 1
) -> Tuple[TrainedModel, SamplerState]:
    """
    Initialize a chain and run `iterations` Gibbs sweeps.

    Args:
        corpus: Training corpus
        hyper: Hyperparameters (including granularity and seed)
        iterations: Number of sweeps (>= 1)
        hook: Called after every sweep with (iteration, sweep seconds, perplexity)
        evaluate: Perplexity function, run every `eval_every` sweeps
        eval_every: Evaluation cadence
        on_sweep: Called after every sweep with (iteration, state)

    Returns:
        The trained model and the final sampler state
    """
    if iterations < 1:
        raise ValueError(f"iterations must be >= 1, got {iterations}")
    if eval_every < 1:
        raise ValueError(f"eval_every must be >= 1, got {eval_every}")

    logger.info(
        f"Training {hyper.granularity.value} model: K={hyper.K}, alpha={hyper.alpha:.4g}, "
        f"beta={hyper.beta:.4g}, iterations={iterations}, seed={hyper.seed}"
    )
    state = init_state(corpus, hyper)

    for iteration in range(1, iterations + 1):
        started = time.perf_counter()
        gibbs_sweep(state)
        seconds = time.perf_counter() - started

        perplexity = None
        if evaluate is not None and iteration % eval_every == 0:
            perplexity = evaluate(state)
            logger.debug(f"Iteration {iteration}: {seconds:.3f}s, perplexity {perplexity:.4f}")
        else:
            logger.debug(f"Iteration {iteration}: {seconds:.3f}s")

        if hook is not None:
            hook(iteration, seconds, perplexity)
        if on_sweep is not None:
            on_sweep(iteration, state)

    model = to_model(state, corpus, format_version=format_version)
    logger.info(f"Training complete after {iterations} iterations")
    return model, state
