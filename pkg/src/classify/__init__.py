"""Topic distributions as classification features."""
from .features import (
    FeatureMatrix,
    align_labels,
    concat_features,
    read_feature_csv,
    read_label_file,
    write_feature_csv,
    write_label_file,
)
from .linear import LinearModel, fit_binary_relevance, train_binary
from .metrics import f1_micro, per_class_f1
from .pipeline import (
    ClassificationReport,
    cross_validate_lambda,
    evaluate_pipeline,
    is_single_label,
    train_test_split,
)

__all__ = [
    "ClassificationReport",
    "FeatureMatrix",
    "LinearModel",
    "align_labels",
    "concat_features",
    "cross_validate_lambda",
    "evaluate_pipeline",
    "f1_micro",
    "fit_binary_relevance",
    "is_single_label",
    "per_class_f1",
    "read_feature_csv",
    "read_label_file",
    "train_binary",
    "train_test_split",
    "write_feature_csv",
    "write_label_file",
]
