"""Linear hinge-loss classifiers and binary relevance."""
import logging
from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Sequence, Tuple

import numpy as np

from ..errors import DegenerateLabels

logger = logging.getLogger(__name__)


def train_binary(
    features: np.ndarray,
    labels: Sequence,
    lam: float,
    epochs: int = 300,
    seed: int = 0,
    batch_size: Optional[int] = None
) -> Tuple[np.ndarray, float]:
    """
    Fit an L2-regularized hinge-loss linear classifier by subgradient descent.

    Weights take Pegasos steps of size 1/(lam t) followed by projection onto
    the ball of radius 1/sqrt(lam). The bias is not regularized and moves
    with step 1/t. Mini-batches are drawn from a seeded shuffle; the default
    uses the full batch.

    Args:
        features: n x d matrix
        labels: Truthy (> 0) entries are positives
        lam: Regularization strength
        epochs: Passes over the data
        seed: Shuffle seed for mini-batches

    Returns:
        (weights, bias); the decision is sign(w . x + b)

    Raises:
        DegenerateLabels: If only one class is present
    """
    X = np.asarray(features, dtype=np.float64)
    positive = np.asarray(labels) > 0
    if positive.all() or not positive.any():
        raise DegenerateLabels("binary training needs positive and negative examples")
    if lam <= 0:
        raise ValueError(f"lambda must be positive, got {lam}")

    y = np.where(positive, 1.0, -1.0)
    n, dim = X.shape
    batch = n if batch_size is None else max(1, min(batch_size, n))
    radius = 1.0 / np.sqrt(lam)
    rng = np.random.default_rng(seed)

    w = np.zeros(dim)
    b = 0.0
    t = 0
    for _ in range(epochs):
        order = rng.permutation(n) if batch < n else np.arange(n)
        for start in range(0, n, batch):
            idx = order[start:start + batch]
            t += 1
            eta = 1.0 / (lam * t)
            X_b, y_b = X[idx], y[idx]
            violated = y_b * (X_b @ w + b) < 1.0

            w = (1.0 - 1.0 / t) * w + (eta / len(idx)) * (y_b[violated] @ X_b[violated])
            b += (1.0 / t) * y_b[violated].sum() / len(idx)

            norm = np.linalg.norm(w)
            if norm > radius:
                w = w * (radius / norm)

    return w, float(b)


@dataclass
class LinearModel:
    """One binary hinge-loss model per class (binary relevance)."""
    classes: List[str]
    weights: np.ndarray
    bias: np.ndarray
    lam: float

    def decision_function(self, features: np.ndarray) -> np.ndarray:
        return np.asarray(features, dtype=np.float64) @ self.weights.T + self.bias

    def predict(self, features: np.ndarray, single_label: bool = False) -> List[FrozenSet[str]]:
        """
        Label sets per document.

        Single-label mode emits only the argmax class. Otherwise every class
        with a positive decision is emitted, falling back to the argmax class
        when none is positive.
        """
        scores = self.decision_function(features)
        predictions = []
        for row in scores:
            best = self.classes[int(np.argmax(row))]
            if single_label:
                predictions.append(frozenset({best}))
                continue
            chosen = frozenset(c for c, score in zip(self.classes, row) if score > 0)
            predictions.append(chosen or frozenset({best}))
        return predictions


def fit_binary_relevance(
    features: np.ndarray,
    label_sets: Sequence[FrozenSet[str]],
    classes: Sequence[str],
    lam: float,
    epochs: int = 300,
    seed: int = 0
) -> LinearModel:
    """Train one independent binary classifier per class."""
    weights = []
    biases = []
    for label in classes:
        binary = [label in labels for labels in label_sets]
        try:
            w, b = train_binary(features, binary, lam, epochs=epochs, seed=seed)
        except DegenerateLabels as e:
            raise DegenerateLabels(f"class {label!r}: {e}") from e
        weights.append(w)
        biases.append(b)
    return LinearModel(
        classes=list(classes),
        weights=np.vstack(weights),
        bias=np.asarray(biases),
        lam=lam
    )
