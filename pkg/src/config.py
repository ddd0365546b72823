"""Configuration management for the senLDA pipeline."""
from pathlib import Path
from typing import List

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings."""

    # Sampler defaults
    default_topics: int = 10
    default_iterations: int = 100
    default_seed: int = 0
    default_granularity: str = "sentence"  # "sentence" or "word"
    eval_every: int = 1
    fold_in_iterations: int = 20

    # Convergence detection
    convergence_rel_eps: float = 1e-3
    convergence_window: int = 3

    # Classification
    lambda_grid: List[float] = [1e-4, 1e-3, 1e-2, 1e-1, 1.0, 1e1, 1e2, 1e3, 1e4]
    folds: int = 5
    test_fraction: float = 0.25
    classifier_epochs: int = 300

    # Application
    environment: str = "development"
    log_level: str = "INFO"
    max_concurrent_chains: int = 1
    model_format_version: int = 1
    corpus_format_version: int = 1

    # Paths
    project_root: Path = Path(__file__).parent.parent

    @property
    def schema_dir(self) -> Path:
        """Get schema directory."""
        return self.project_root / "schemas"

    @property
    def data_dir(self) -> Path:
        """Get bundled data directory (toy corpus, stopwords)."""
        return self.project_root / "data"

    model_config = SettingsConfigDict(
        env_prefix="SENLDA_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False
    )


# Global settings instance
settings = Settings()
