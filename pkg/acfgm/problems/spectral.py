"""Largest eigenvalue of K^T K by power iteration."""

import logging
from typing import Callable

import numpy as np

log = logging.getLogger(__name__)


def power_iteration(
    forward: Callable[[np.ndarray], np.ndarray],
    adjoint: Callable[[np.ndarray], np.ndarray],
    n: int,
    tol: float = 1e-8,
    max_iter: int = 10_000,
    seed: int = 0,
) -> float:
    """Return lambda_max(K^T K) given x -> Kx and v -> K^T v."""
    rng = np.random.default_rng(seed)
    x = rng.standard_normal(n)
    x /= np.linalg.norm(x)
    val = 0.0
    for it in range(max_iter):
        y = adjoint(forward(x))
        new_val = float(np.linalg.norm(y))
        if new_val == 0.0:
            return 0.0
        x = y / new_val
        if it > 0 and abs(new_val - val) <= tol * new_val:
            val = new_val
            break
        val = new_val
    else:
        log.warning("power iteration stopped at the cap of %d iterations", max_iter)
    log.debug("power iteration: lambda_max=%.10g after %d iterations", val, it + 1)
    return val
