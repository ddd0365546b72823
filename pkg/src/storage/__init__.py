"""Persistence for models, corpora, ground truth and run configs."""
from .corpus_io import load_corpus, load_ground_truth, save_corpus, save_ground_truth
from .model_io import load_model, model_to_json, save_model
from .run_config import RunConfig, config_path_for, write_run_config
from .validator import load_schema, validate_document

__all__ = [
    "RunConfig",
    "config_path_for",
    "load_corpus",
    "load_ground_truth",
    "load_model",
    "load_schema",
    "model_to_json",
    "save_corpus",
    "save_ground_truth",
    "save_model",
    "validate_document",
    "write_run_config",
]
