"""Sampler data types."""
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..corpus import Vocabulary


class Granularity(str, Enum):
    """Unit that receives a single topic assignment."""
    SENTENCE = "sentence"
    WORD = "word"


class Hyperparams(BaseModel):
    """Symmetric-prior model hyperparameters; alpha and beta default to 1/K."""
    model_config = ConfigDict(frozen=True)

    K: int = Field(ge=1)
    alpha: float = Field(gt=0)
    beta: float = Field(gt=0)
    granularity: Granularity = Granularity.SENTENCE
    seed: int = Field(0, ge=0, lt=2**64)

    @model_validator(mode="before")
    @classmethod
    def _default_priors(cls, data: Any) -> Any:
        if isinstance(data, dict) and isinstance(data.get("K"), int) and data["K"] > 0:
            data = dict(data)
            for prior in ("alpha", "beta"):
                if data.get(prior) is None:
                    data[prior] = 1.0 / data["K"]
        return data


@dataclass
class Segment:
    """A unit sharing one topic: distinct word ids with their frequencies."""
    words: np.ndarray
    freqs: np.ndarray
    length: int

    @classmethod
    def from_tokens(cls, tokens) -> "Segment":
        words, freqs = np.unique(np.asarray(tokens, dtype=np.int64), return_counts=True)
        return cls(words=words, freqs=freqs.astype(np.int64), length=int(freqs.sum()))


@dataclass
class SamplerState:
    """
    Collapsed Gibbs state.

    ``doc_topic`` counts segments (not tokens) per topic; ``topic_term`` and
    ``topic_total`` count tokens. Within-segment frequencies live on the
    ``Segment`` objects.
    """
    hyper: Hyperparams
    segments: List[List[Segment]]
    z: List[np.ndarray]
    topic_term: np.ndarray
    topic_total: np.ndarray
    doc_topic: np.ndarray
    doc_total: np.ndarray
    rng: np.random.Generator
    _token_index: Optional[Tuple[np.ndarray, np.ndarray, np.ndarray]] = field(default=None, repr=False)

    @property
    def num_topics(self) -> int:
        return self.hyper.K

    @property
    def vocab_size(self) -> int:
        return self.topic_term.shape[1]

    @property
    def num_documents(self) -> int:
        return len(self.segments)

    def assignments(self) -> List[List[int]]:
        """Plain-list copy of z."""
        return [z_d.tolist() for z_d in self.z]

    def token_index(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """(document, word, frequency) for each distinct word of each segment."""
        if self._token_index is None:
            docs, words, freqs = [], [], []
            for d, doc_segments in enumerate(self.segments):
                for seg in doc_segments:
                    docs.append(np.full(len(seg.words), d, dtype=np.int64))
                    words.append(seg.words)
                    freqs.append(seg.freqs)
            self._token_index = (np.concatenate(docs), np.concatenate(words), np.concatenate(freqs))
        return self._token_index


@dataclass
class TrainedModel:
    """Topic-term matrix plus everything needed to reuse it."""
    phi: np.ndarray
    hyperparams: Hyperparams
    vocabulary: Vocabulary
    format_version: int = 1

    def __post_init__(self):
        self.phi = np.asarray(self.phi, dtype=np.float64)
        if self.phi.ndim != 2 or self.phi.shape[0] != self.hyperparams.K:
            raise ValueError(f"phi must be K x V with K={self.hyperparams.K}, got {self.phi.shape}")
        if self.phi.shape[1] != self.vocabulary.size:
            raise ValueError(f"phi has {self.phi.shape[1]} columns for V={self.vocabulary.size}")
        if not np.all(self.phi > 0):
            raise ValueError("phi entries must be strictly positive")
        row_sums = self.phi.sum(axis=1)
        if not np.allclose(row_sums, 1.0, rtol=0.0, atol=1e-9):
            raise ValueError(f"phi rows must sum to 1, got {row_sums}")

    @property
    def K(self) -> int:
        return self.hyperparams.K

    @property
    def V(self) -> int:
        return self.vocabulary.size

    def top_terms(self, k: int, n: int = 10) -> List[str]:
        """Most probable terms of topic k."""
        order = np.argsort(-self.phi[k], kind="stable")[:n]
        return [self.vocabulary.id_to_term[i] for i in order]


@dataclass
class TopicDistribution:
    """Per-document topic mixture; ``empty`` flags a document with no tokens."""
    theta: np.ndarray
    empty: bool = False

    def __post_init__(self):
        self.theta = np.asarray(self.theta, dtype=np.float64)


class GeneratorConfig(BaseModel):
    """Synthetic corpus parameters for the generative process."""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    D: int = Field(ge=1)
    xi_sentences: float = Field(gt=0)
    xi_words: float = Field(gt=0)
    vocab_size: Optional[int] = Field(None, ge=1)
    true_phi: Optional[np.ndarray] = None

    @model_validator(mode="after")
    def _vocab_source(self) -> "GeneratorConfig":
        if self.true_phi is None and self.vocab_size is None:
            raise ValueError("either vocab_size or true_phi is required")
        if self.true_phi is not None:
            phi = np.asarray(self.true_phi, dtype=np.float64)
            if phi.ndim != 2:
                raise ValueError("true_phi must be a K x V matrix")
            if self.vocab_size is not None and phi.shape[1] != self.vocab_size:
                raise ValueError("true_phi width does not match vocab_size")
        return self

    @property
    def V(self) -> int:
        if self.true_phi is not None:
            return int(np.asarray(self.true_phi).shape[1])
        return int(self.vocab_size)


@dataclass
class GroundTruth:
    """Latent variables drawn by the generator."""
    phi: np.ndarray
    theta: np.ndarray
    z: List[List[int]]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "phi": self.phi.tolist(),
            "theta": self.theta.tolist(),
            "z": self.z,
        }
