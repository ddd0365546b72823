"""Compare recovered topics with known ones."""
from typing import List, Tuple

import numpy as np


def total_variation(p: np.ndarray, q: np.ndarray) -> float:
    return 0.5 * float(np.abs(np.asarray(p) - np.asarray(q)).sum())


def match_topics(phi_est: np.ndarray, phi_true: np.ndarray) -> Tuple[List[Tuple[int, int]], List[float]]:
    """
    Greedy one-to-one matching of estimated to true topics by total variation.

    Repeatedly takes the closest unmatched (estimated, true) pair.

    Returns:
        (pairs of (estimated, true) ids, distance of each pair), ordered by true id
    """
    phi_est = np.asarray(phi_est)
    phi_true = np.asarray(phi_true)
    distances = 0.5 * np.abs(phi_est[:, None, :] - phi_true[None, :, :]).sum(axis=2)

    pairs = []
    remaining = distances.copy()
    for _ in range(min(remaining.shape)):
        i, j = np.unravel_index(np.argmin(remaining), remaining.shape)
        pairs.append((int(i), int(j)))
        remaining[i, :] = np.inf
        remaining[:, j] = np.inf

    pairs.sort(key=lambda pair: pair[1])
    return pairs, [float(distances[i, j]) for i, j in pairs]
