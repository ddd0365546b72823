"""Perplexity, diagnostics series and convergence detection."""
from .diagnostics import (
    DiagnosticsRow,
    DiagnosticsSeries,
    detect_convergence,
    first_iterations_seconds,
    perplexity_ratio,
    read_diagnostics_csv,
    write_diagnostics_csv,
    write_ratio_csv,
)
from .perplexity import PerplexityReport, perplexity, perplexity_from_thetas, training_perplexity
from .recovery import match_topics, total_variation
from .selection import TopicSelectionReport, kfold_indices, select_topic_count

__all__ = [
    "DiagnosticsRow",
    "DiagnosticsSeries",
    "PerplexityReport",
    "TopicSelectionReport",
    "detect_convergence",
    "first_iterations_seconds",
    "kfold_indices",
    "match_topics",
    "perplexity",
    "perplexity_from_thetas",
    "perplexity_ratio",
    "read_diagnostics_csv",
    "select_topic_count",
    "total_variation",
    "training_perplexity",
    "write_diagnostics_csv",
    "write_ratio_csv",
]
