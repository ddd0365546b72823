"""Benchmark orchestration for concurrent training chains."""
from .bench import BenchJob, BenchRunner, ChainStatus, ChainTask

__all__ = ["BenchJob", "BenchRunner", "ChainStatus", "ChainTask"]
