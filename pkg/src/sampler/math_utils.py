"""Log-space helpers for the sampler."""
import math

import numpy as np
from scipy.special import gammaln

from ..errors import DomainError, NumericalError

# Above this length the explicit sum is replaced by log-gamma differences
_EXPLICIT_SUM_LIMIT = 64


def log_rising_factorial(x: float, m: int) -> float:
    """
    log of x (x+1) ... (x+m-1).

    Args:
        x: Positive base
        m: Number of factors (0 gives exactly 0.0)

    Raises:
        DomainError: If x <= 0 or m < 0
    """
    if not x > 0:
        raise DomainError(f"rising factorial base must be positive, got {x}")
    if m < 0:
        raise DomainError(f"rising factorial length must be non-negative, got {m}")
    if m == 0:
        return 0.0
    if m <= _EXPLICIT_SUM_LIMIT:
        return math.fsum(math.log(x + i) for i in range(m))
    return float(gammaln(x + m) - gammaln(x))


def log_rising_factorial_array(x: np.ndarray, m: np.ndarray) -> np.ndarray:
    """Elementwise log rising factorial via log-gamma; no domain checks."""
    return gammaln(x + m) - gammaln(x)


def log_normalize(log_weights: np.ndarray) -> np.ndarray:
    """Normalized probabilities from unnormalized log weights."""
    log_weights = np.asarray(log_weights, dtype=np.float64)
    shifted = np.exp(log_weights - np.max(log_weights))
    return shifted / shifted.sum()


def sample_categorical_log(log_weights: np.ndarray, rng: np.random.Generator) -> int:
    """
    Draw an index from unnormalized log weights with the log-sum-exp trick.

    The max is subtracted before exponentiating and the inverse CDF is
    scanned from index 0 upward, so a given rng state fixes the draw.

    Raises:
        NumericalError: If every weight is -inf or any weight is NaN/+inf
    """
    log_weights = np.asarray(log_weights, dtype=np.float64)
    top = np.max(log_weights)
    if not np.isfinite(top) or np.isnan(log_weights).any():
        raise NumericalError(f"cannot sample from log weights {log_weights}")

    cdf = np.cumsum(np.exp(log_weights - top))
    u = rng.random() * cdf[-1]
    choice = int(np.searchsorted(cdf, u, side="right"))
    return min(choice, len(cdf) - 1)
