"""Lambda selection, train/test evaluation and reporting."""
import logging
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel

from ..errors import DegenerateLabels
from ..evaluation import kfold_indices
from .linear import fit_binary_relevance
from .metrics import f1_micro, per_class_f1

logger = logging.getLogger(__name__)


class ClassificationReport(BaseModel):
    """Test-set scores of a binary-relevance classifier."""
    micro_f1: float
    per_class: Dict[str, float]
    chosen_lambda: float
    feature_dim: int
    n_train: int
    n_test: int
    single_label: bool
    components: Optional[Dict[str, float]] = None
    concatenation_outperforms: Optional[bool] = None


def is_single_label(label_sets: Sequence[FrozenSet[str]]) -> bool:
    """True when every document carries exactly one class."""
    return all(len(labels) == 1 for labels in label_sets)


def class_list(*label_groups: Sequence[FrozenSet[str]]) -> List[str]:
    return sorted({label for group in label_groups for labels in group for label in labels})


def train_test_split(n: int, test_fraction: float = 0.25, seed: int = 0) -> Tuple[np.ndarray, np.ndarray]:
    """Seeded split of n documents; both parts keep their original order."""
    if not 0.0 < test_fraction < 1.0:
        raise ValueError(f"test_fraction must be in (0, 1), got {test_fraction}")
    if n < 2:
        raise ValueError("need at least two documents to split")
    n_test = min(n - 1, max(1, int(round(n * test_fraction))))
    order = np.random.default_rng(seed).permutation(n)
    return np.sort(order[n_test:]), np.sort(order[:n_test])


def cross_validate_lambda(
    features: np.ndarray,
    label_sets: Sequence[FrozenSet[str]],
    grid: Sequence[float],
    folds: int = 5,
    seed: int = 0,
    epochs: int = 300
) -> float:
    """
    Pick lambda by k-fold mean validation micro-F1.

    Folds where some class is missing or universal in the training part are
    skipped with a warning. Ties go to the larger lambda.

    Raises:
        DegenerateLabels: If every fold is degenerate
    """
    if not grid:
        raise ValueError("lambda grid is empty")

    X = np.asarray(features, dtype=np.float64)
    classes = class_list(label_sets)
    single = is_single_label(label_sets)
    blocks = kfold_indices(len(label_sets), folds, seed)

    best_lambda, best_score = None, -1.0
    for lam in sorted(set(grid)):
        scores = []
        for fold, val_idx in enumerate(blocks):
            train_idx = np.concatenate([b for i, b in enumerate(blocks) if i != fold])
            try:
                model = fit_binary_relevance(
                    X[train_idx], [label_sets[i] for i in train_idx], classes, lam, epochs=epochs, seed=seed
                )
            except DegenerateLabels as e:
                logger.warning(f"Skipping fold {fold} for lambda={lam:g}: {e}")
                continue
            predictions = model.predict(X[val_idx], single_label=single)
            scores.append(f1_micro(predictions, [label_sets[i] for i in val_idx]))

        if not scores:
            raise DegenerateLabels("every cross-validation fold is degenerate")
        score = float(np.mean(scores))
        logger.debug(f"lambda={lam:g}: mean validation micro-F1 {score:.4f}")
        if score >= best_score:
            best_lambda, best_score = lam, score

    logger.info(f"Selected lambda={best_lambda:g} (validation micro-F1 {best_score:.4f})")
    return best_lambda


def evaluate_pipeline(
    train_features: np.ndarray,
    train_labels: Sequence[FrozenSet[str]],
    test_features: np.ndarray,
    test_labels: Sequence[FrozenSet[str]],
    grid: Sequence[float],
    folds: int = 5,
    seed: int = 0,
    epochs: int = 300
) -> ClassificationReport:
    """
    Choose lambda by cross-validation on train, refit on all of train and
    score the test part.

    Data where every document has one class is predicted single-label
    (argmax), so micro-F1 equals accuracy; otherwise binary relevance with
    positive decisions.
    """
    train_X = np.asarray(train_features, dtype=np.float64)
    test_X = np.asarray(test_features, dtype=np.float64)
    if train_X.shape[1] != test_X.shape[1]:
        raise ValueError(f"train has {train_X.shape[1]} features, test has {test_X.shape[1]}")

    single = is_single_label(train_labels) and is_single_label(test_labels)
    classes = class_list(train_labels)

    lam = cross_validate_lambda(train_X, train_labels, grid, folds=folds, seed=seed, epochs=epochs)
    model = fit_binary_relevance(train_X, train_labels, classes, lam, epochs=epochs, seed=seed)
    predictions = model.predict(test_X, single_label=single)

    report = ClassificationReport(
        micro_f1=f1_micro(predictions, test_labels),
        per_class=per_class_f1(predictions, test_labels, class_list(train_labels, test_labels)),
        chosen_lambda=lam,
        feature_dim=train_X.shape[1],
        n_train=len(train_labels),
        n_test=len(test_labels),
        single_label=single
    )
    logger.info(f"Test micro-F1 {report.micro_f1:.4f} with {report.feature_dim} features")
    return report
