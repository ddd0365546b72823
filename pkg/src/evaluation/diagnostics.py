"""Per-iteration diagnostics: series, CSV export, ratios and convergence."""
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union

import pandas as pd

from ..errors import IterationMismatch

DIAGNOSTICS_COLUMNS = ["iteration", "seconds", "perplexity", "label"]


@dataclass
class DiagnosticsRow:
    iteration: int
    seconds: float
    perplexity: Optional[float] = None


@dataclass
class DiagnosticsSeries:
    """Timing and perplexity per sweep for one chain."""
    label: str
    rows: List[DiagnosticsRow] = field(default_factory=list)
    seed: Optional[int] = None

    def record(self, iteration: int, seconds: float, perplexity: Optional[float] = None) -> None:
        """Append a row; matches the training hook signature."""
        if self.rows and iteration <= self.rows[-1].iteration:
            raise ValueError(
                f"iterations must increase: {iteration} after {self.rows[-1].iteration}"
            )
        self.rows.append(DiagnosticsRow(iteration, seconds, perplexity))

    def evaluated(self) -> List[DiagnosticsRow]:
        """Rows that carry a perplexity value."""
        return [row for row in self.rows if row.perplexity is not None]

    def to_frame(self) -> pd.DataFrame:
        frame = pd.DataFrame(
            [(r.iteration, r.seconds, r.perplexity, self.label) for r in self.rows],
            columns=DIAGNOSTICS_COLUMNS
        )
        if self.seed is not None:
            frame["seed"] = self.seed
        return frame


def write_diagnostics_csv(series: Union[DiagnosticsSeries, Sequence[DiagnosticsSeries]], path: Path) -> None:
    """Write `iteration,seconds,perplexity,label` (plus `seed` for bench runs)."""
    if isinstance(series, DiagnosticsSeries):
        series = [series]
    frame = pd.concat([s.to_frame() for s in series], ignore_index=True)
    frame.to_csv(path, index=False)


def read_diagnostics_csv(path: Path) -> List[DiagnosticsSeries]:
    """Read a diagnostics CSV back into one series per label (and seed)."""
    frame = pd.read_csv(path)
    missing = set(DIAGNOSTICS_COLUMNS) - set(frame.columns)
    if missing:
        raise ValueError(f"{path} is missing columns {sorted(missing)}")

    keys = ["label", "seed"] if "seed" in frame.columns else ["label"]
    series = []
    for key, group in frame.groupby(keys, sort=False):
        key = key if isinstance(key, tuple) else (key,)
        current = DiagnosticsSeries(
            label=str(key[0]),
            seed=int(key[1]) if len(key) > 1 else None
        )
        for row in group.itertuples(index=False):
            value = None if pd.isna(row.perplexity) else float(row.perplexity)
            current.record(int(row.iteration), float(row.seconds), value)
        series.append(current)
    return series


def perplexity_ratio(
    series_a: DiagnosticsSeries,
    series_b: DiagnosticsSeries
) -> List[Tuple[int, float]]:
    """
    Perplexity of b over perplexity of a at every evaluated iteration.

    Values above 1 mean model a reaches the lower perplexity.

    Raises:
        IterationMismatch: If the evaluated iterations differ
    """
    rows_a = series_a.evaluated()
    rows_b = series_b.evaluated()
    iterations_a = [row.iteration for row in rows_a]
    iterations_b = [row.iteration for row in rows_b]
    if iterations_a != iterations_b:
        raise IterationMismatch(
            f"{series_a.label} and {series_b.label} were evaluated at different iterations"
        )
    return [(a.iteration, b.perplexity / a.perplexity) for a, b in zip(rows_a, rows_b)]


def write_ratio_csv(ratios: Sequence[Tuple[int, float]], path: Path) -> None:
    pd.DataFrame(list(ratios), columns=["iteration", "ratio"]).to_csv(path, index=False)


def detect_convergence(
    series: DiagnosticsSeries,
    rel_eps: float = 1e-3,
    window: int = 3
) -> Optional[int]:
    """
    First iteration where perplexity stopped decreasing.

    Fires at the first evaluated point t whose trailing `window` points all
    have relative decrease (p_prev - p_cur) / p_prev below rel_eps between
    consecutive evaluations.

    Returns:
        The iteration, or None if the series never settles
    """
    if window < 2:
        raise ValueError(f"window must be >= 2, got {window}")

    values = [(row.iteration, row.perplexity) for row in series.evaluated()]
    for end in range(window - 1, len(values)):
        trailing = values[end - window + 1:end + 1]
        if all(
            (prev - cur) / prev < rel_eps
            for (_, prev), (_, cur) in zip(trailing, trailing[1:])
        ):
            return trailing[-1][0]
    return None


def first_iterations_seconds(series: DiagnosticsSeries, n: int = 25) -> float:
    """Wall-clock seconds of the first n sweeps."""
    return math.fsum(row.seconds for row in series.rows[:n])
