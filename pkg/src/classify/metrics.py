"""F1 scores over label sets."""
from typing import AbstractSet, Dict, Sequence


def _f1(tp: int, fp: int, fn: int) -> float:
    precision = tp / (tp + fp) if tp + fp else 0.0
    recall = tp / (tp + fn) if tp + fn else 0.0
    if precision + recall == 0:
        return 0.0
    return 2 * precision * recall / (precision + recall)


def f1_micro(
    predictions: Sequence[AbstractSet[str]],
    gold: Sequence[AbstractSet[str]]
) -> float:
    """Micro-averaged F1 over every (document, class) decision."""
    if len(predictions) != len(gold):
        raise ValueError(f"{len(predictions)} predictions for {len(gold)} documents")
    tp = sum(len(p & g) for p, g in zip(predictions, gold))
    fp = sum(len(p - g) for p, g in zip(predictions, gold))
    fn = sum(len(g - p) for p, g in zip(predictions, gold))
    return _f1(tp, fp, fn)


def per_class_f1(
    predictions: Sequence[AbstractSet[str]],
    gold: Sequence[AbstractSet[str]],
    classes: Sequence[str]
) -> Dict[str, float]:
    scores = {}
    for label in classes:
        tp = sum(1 for p, g in zip(predictions, gold) if label in p and label in g)
        fp = sum(1 for p, g in zip(predictions, gold) if label in p and label not in g)
        fn = sum(1 for p, g in zip(predictions, gold) if label not in p and label in g)
        scores[label] = _f1(tp, fp, fn)
    return scores
