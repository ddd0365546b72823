"""Document feature matrices and label files."""
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, FrozenSet, List, Sequence, Union

import numpy as np
import pandas as pd

from ..errors import DocIdMismatch, InputFormatError

LabelMap = Dict[str, FrozenSet[str]]


@dataclass
class FeatureMatrix:
    """Row-per-document nonnegative features (topic distributions)."""
    doc_ids: List[str]
    values: np.ndarray

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=np.float64)
        if self.values.ndim != 2 or self.values.shape[0] != len(self.doc_ids):
            raise ValueError(
                f"values must have one row per document, got {self.values.shape} for {len(self.doc_ids)} ids"
            )
        if (self.values < 0).any():
            raise ValueError("features must be nonnegative")

    @property
    def dim(self) -> int:
        return self.values.shape[1]

    def rows(self, indices: Sequence[int]) -> "FeatureMatrix":
        return FeatureMatrix([self.doc_ids[i] for i in indices], self.values[list(indices)])


def concat_features(a: FeatureMatrix, b: FeatureMatrix) -> FeatureMatrix:
    """
    Row-wise concatenation of two representations of the same documents.

    Raises:
        DocIdMismatch: If the documents or their order differ
    """
    if a.doc_ids != b.doc_ids:
        raise DocIdMismatch("feature matrices must list the same documents in the same order")
    return FeatureMatrix(list(a.doc_ids), np.hstack([a.values, b.values]))


def write_feature_csv(features: FeatureMatrix, path: Union[str, Path]) -> None:
    """Write `doc_id,f0,...,f{K-1}`."""
    frame = pd.DataFrame(features.values, columns=[f"f{i}" for i in range(features.dim)])
    frame.insert(0, "doc_id", features.doc_ids)
    frame.to_csv(path, index=False)


def read_feature_csv(path: Union[str, Path]) -> FeatureMatrix:
    frame = pd.read_csv(path, dtype={"doc_id": str})
    if "doc_id" not in frame.columns:
        raise InputFormatError(f"{path} has no 'doc_id' column")
    return FeatureMatrix(frame["doc_id"].tolist(), frame.drop(columns="doc_id").to_numpy(dtype=np.float64))


def write_label_file(labels: LabelMap, path: Union[str, Path]) -> None:
    """Write `doc_id,labels` with classes joined by ';'."""
    frame = pd.DataFrame(
        [(doc_id, ";".join(sorted(classes))) for doc_id, classes in labels.items()],
        columns=["doc_id", "labels"]
    )
    frame.to_csv(path, index=False)


def read_label_file(path: Union[str, Path]) -> LabelMap:
    frame = pd.read_csv(path, dtype=str, keep_default_na=False)
    if list(frame.columns[:2]) != ["doc_id", "labels"]:
        raise InputFormatError(f"{path} must have columns doc_id,labels")
    return {
        row.doc_id: frozenset(label for label in row.labels.split(";") if label)
        for row in frame.itertuples(index=False)
    }


def align_labels(features: FeatureMatrix, labels: LabelMap) -> List[FrozenSet[str]]:
    """Label sets in feature-row order."""
    missing = [doc_id for doc_id in features.doc_ids if doc_id not in labels]
    if missing:
        raise DocIdMismatch(f"{len(missing)} documents have no labels, e.g. {missing[0]!r}")
    return [labels[doc_id] for doc_id in features.doc_ids]
