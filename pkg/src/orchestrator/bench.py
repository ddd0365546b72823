"""Benchmark harness: sentence vs word chains over a seed list."""
import logging
import uuid
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime
from enum import Enum
from typing import Any, Callable, Dict, List, Optional, Sequence

from ..config import settings
from ..corpus import Corpus
from ..evaluation import (
    DiagnosticsSeries,
    detect_convergence,
    first_iterations_seconds,
    perplexity,
    training_perplexity,
)
from ..sampler import Granularity, Hyperparams, SamplerState, to_model, train

logger = logging.getLogger(__name__)


class ChainStatus(str, Enum):
    """Chain status enum."""
    PENDING = "pending"
    RUNNING = "running"
    COMPLETED = "completed"
    FAILED = "failed"


@dataclass
class ChainTask:
    """One training chain of a benchmark."""
    granularity: Granularity
    seed: int
    status: ChainStatus = ChainStatus.PENDING
    series: Optional[DiagnosticsSeries] = None
    convergence_iteration: Optional[int] = None
    first_seconds: Optional[float] = None
    error: Optional[str] = None
    started_at: Optional[datetime] = None
    completed_at: Optional[datetime] = None

    @property
    def final_perplexity(self) -> Optional[float]:
        if self.series is None:
            return None
        evaluated = self.series.evaluated()
        return evaluated[-1].perplexity if evaluated else None


@dataclass
class BenchJob:
    """A set of chains sharing corpus, K and iteration count."""
    job_id: str
    tasks: List[ChainTask]
    status: ChainStatus = ChainStatus.PENDING
    created_at: datetime = field(default_factory=datetime.now)
    completed_at: Optional[datetime] = None

    @property
    def progress(self) -> Dict[str, Any]:
        """Get job progress."""
        total = len(self.tasks)
        completed = sum(1 for t in self.tasks if t.status == ChainStatus.COMPLETED)
        failed = sum(1 for t in self.tasks if t.status == ChainStatus.FAILED)
        running = sum(1 for t in self.tasks if t.status == ChainStatus.RUNNING)

        return {
            "total": total,
            "completed": completed,
            "failed": failed,
            "running": running,
            "pending": total - completed - failed - running,
            "percent": (completed / total * 100) if total > 0 else 0
        }

    def series(self) -> List[DiagnosticsSeries]:
        return [t.series for t in self.tasks if t.series is not None]


def _evaluator(
    corpus: Corpus,
    heldout: Optional[Corpus],
    fold_in_iterations: int,
    seed: int
) -> Callable[[SamplerState], float]:
    if heldout is None:
        return training_perplexity

    def heldout_perplexity(state: SamplerState) -> float:
        model = to_model(state, corpus)
        return perplexity(model, heldout, fold_in_iterations, seed).perplexity

    return heldout_perplexity


def _run_chain(
    corpus: Corpus,
    hyper: Hyperparams,
    iterations: int,
    eval_every: int,
    heldout: Optional[Corpus],
    fold_in_iterations: int
) -> DiagnosticsSeries:
    """Train one chain and return its diagnostics (module level so it pickles)."""
    series = DiagnosticsSeries(label=hyper.granularity.value, seed=hyper.seed)
    train(
        corpus,
        hyper,
        iterations,
        hook=series.record,
        evaluate=_evaluator(corpus, heldout, fold_in_iterations, hyper.seed),
        eval_every=eval_every
    )
    return series


class BenchRunner:
    """Runs sentence- and word-granularity chains with identical corpus and seeds."""

    def __init__(
        self,
        corpus: Corpus,
        K: int,
        iterations: int,
        alpha: Optional[float] = None,
        beta: Optional[float] = None,
        eval_every: int = 1,
        heldout: Optional[Corpus] = None,
        fold_in_iterations: Optional[int] = None,
        rel_eps: Optional[float] = None,
        window: Optional[int] = None,
        first_n: int = 25,
        max_workers: Optional[int] = None
    ):
        self.corpus = corpus
        self.K = K
        self.iterations = iterations
        self.alpha = alpha
        self.beta = beta
        self.eval_every = eval_every
        self.heldout = heldout
        self.fold_in_iterations = fold_in_iterations or settings.fold_in_iterations
        self.rel_eps = settings.convergence_rel_eps if rel_eps is None else rel_eps
        self.window = window or settings.convergence_window
        self.first_n = first_n
        self.max_workers = max_workers or settings.max_concurrent_chains
        self.jobs: Dict[str, BenchJob] = {}

    def create_job(self, seeds: Sequence[int]) -> BenchJob:
        """
        Create one sentence and one word chain per seed.

        Args:
            seeds: Chain seeds, shared by both granularities

        Returns:
            BenchJob instance
        """
        if not seeds:
            raise ValueError("at least one seed is required")
        tasks = [
            ChainTask(granularity=granularity, seed=seed)
            for seed in seeds
            for granularity in (Granularity.SENTENCE, Granularity.WORD)
        ]
        job = BenchJob(job_id=str(uuid.uuid4()), tasks=tasks)
        self.jobs[job.job_id] = job
        logger.info(f"Created bench job {job.job_id} with {len(tasks)} chains")
        return job

    def _hyper(self, task: ChainTask) -> Hyperparams:
        return Hyperparams(
            K=self.K,
            alpha=self.alpha,
            beta=self.beta,
            granularity=task.granularity,
            seed=task.seed
        )

    def _chain_args(self, task: ChainTask) -> tuple:
        return (self.corpus, self._hyper(task), self.iterations, self.eval_every,
                self.heldout, self.fold_in_iterations)

    def _finish(self, task: ChainTask, series: DiagnosticsSeries) -> None:
        task.series = series
        task.convergence_iteration = detect_convergence(series, rel_eps=self.rel_eps, window=self.window)
        task.first_seconds = first_iterations_seconds(series, self.first_n)
        task.status = ChainStatus.COMPLETED
        task.completed_at = datetime.now()
        logger.info(
            f"{task.granularity.value} chain seed={task.seed}: converged at "
            f"{task.convergence_iteration}, first {self.first_n} sweeps {task.first_seconds:.3f}s"
        )

    def _fail(self, task: ChainTask, error: Exception) -> None:
        logger.error(f"{task.granularity.value} chain seed={task.seed} failed: {error}", exc_info=error)
        task.error = str(error)
        task.status = ChainStatus.FAILED
        task.completed_at = datetime.now()

    def run(self, job: BenchJob) -> BenchJob:
        """
        Run every chain of a job, concurrently when max_workers > 1.

        Chain failures are recorded on the task; the job is FAILED if any chain failed.
        """
        job.status = ChainStatus.RUNNING
        logger.info(f"Running bench job {job.job_id} with {self.max_workers} worker(s)")

        if self.max_workers > 1:
            with ProcessPoolExecutor(max_workers=self.max_workers) as pool:
                futures = []
                for task in job.tasks:
                    task.status = ChainStatus.RUNNING
                    task.started_at = datetime.now()
                    futures.append(pool.submit(_run_chain, *self._chain_args(task)))
                for task, future in zip(job.tasks, futures):
                    try:
                        self._finish(task, future.result())
                    except Exception as e:
                        self._fail(task, e)
        else:
            for task in job.tasks:
                task.status = ChainStatus.RUNNING
                task.started_at = datetime.now()
                try:
                    self._finish(task, _run_chain(*self._chain_args(task)))
                except Exception as e:
                    self._fail(task, e)

        job.completed_at = datetime.now()
        job.status = ChainStatus.COMPLETED if all(
            t.status == ChainStatus.COMPLETED for t in job.tasks
        ) else ChainStatus.FAILED
        logger.info(f"Bench job {job.job_id} finished: {job.progress}")
        return job

    def summary(self, job: BenchJob) -> Dict[str, Any]:
        """Convergence iterations and early-sweep timings per chain."""
        chains = [
            {
                "granularity": t.granularity.value,
                "seed": t.seed,
                "status": t.status.value,
                "convergence_iteration": t.convergence_iteration,
                f"first_{self.first_n}_seconds": t.first_seconds,
                "final_perplexity": t.final_perplexity,
                "error": t.error,
            }
            for t in job.tasks
        ]

        by_seed: Dict[int, Dict[str, ChainTask]] = {}
        for t in job.tasks:
            by_seed.setdefault(t.seed, {})[t.granularity.value] = t
        sentence_faster = 0
        for pair in by_seed.values():
            sentence, word = pair.get("sentence"), pair.get("word")
            if sentence is None or word is None or sentence.convergence_iteration is None:
                continue
            if word.convergence_iteration is None or sentence.convergence_iteration < word.convergence_iteration:
                sentence_faster += 1

        return {
            "K": self.K,
            "iterations": self.iterations,
            "eval_every": self.eval_every,
            "rel_eps": self.rel_eps,
            "window": self.window,
            "evaluation": "heldout" if self.heldout is not None else "training",
            "seeds": list(by_seed),
            "chains": chains,
            "sentence_converges_faster": sentence_faster,
        }
