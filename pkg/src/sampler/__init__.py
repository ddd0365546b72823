"""Collapsed Gibbs sampler for sentence-level (and word-level) topic models."""
from .generator import block_topics, generate_corpus
from .gibbs import (
    estimate_phi,
    estimate_theta,
    estimate_theta_matrix,
    full_conditional,
    gibbs_sweep,
    log_segment_factor,
    to_model,
    train,
)
from .inference import document_seed, infer_theta
from .math_utils import log_normalize, log_rising_factorial, sample_categorical_log
from .oracle import log_joint
from .state import build_segments, check_consistency, count_assignments, init_state
from .types import (
    GeneratorConfig,
    Granularity,
    GroundTruth,
    Hyperparams,
    SamplerState,
    Segment,
    TopicDistribution,
    TrainedModel,
)

__all__ = [
    "GeneratorConfig",
    "Granularity",
    "GroundTruth",
    "Hyperparams",
    "SamplerState",
    "Segment",
    "TopicDistribution",
    "TrainedModel",
    "block_topics",
    "build_segments",
    "check_consistency",
    "count_assignments",
    "document_seed",
    "estimate_phi",
    "estimate_theta",
    "estimate_theta_matrix",
    "full_conditional",
    "generate_corpus",
    "gibbs_sweep",
    "infer_theta",
    "init_state",
    "log_joint",
    "log_normalize",
    "log_rising_factorial",
    "log_segment_factor",
    "sample_categorical_log",
    "to_model",
    "train",
]
