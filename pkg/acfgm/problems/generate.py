"""Seeded synthetic instances.

All generators draw from ``numpy.random.default_rng(seed)`` (PCG64), so an
instance is reproducible from (m, n, seed) on any platform.
"""

import numpy as np
from scipy.special import expit

from acfgm.core.linalg import SparseMatrixCSR, matvec
from acfgm.errors import InvalidInputError
from acfgm.problems.dataset import Dataset


def _check_shape(m: int, n: int, seed: int) -> None:
    if m < 1 or n < 1:
        raise InvalidInputError(f"instance needs m, n >= 1, got m={m}, n={n}")
    if not 0 <= seed < 2**64:
        raise InvalidInputError(f"seed must be a 64-bit unsigned integer, got {seed}")


def _sparse_truth(rng: np.random.Generator, n: int, fraction: float = 0.1) -> np.ndarray:
    k = max(1, int(round(fraction * n)))
    x = np.zeros(n)
    support = rng.choice(n, size=k, replace=False)
    x[support] = rng.choice([-1.0, 1.0], size=k) * rng.uniform(0.5, 1.5, size=k)
    return x


def random_qp_instance(m: int, n: int, seed: int) -> Dataset:
    """Uniform [0, 1] design, x* uniform in the unit ball, b = A x*."""
    _check_shape(m, n, seed)
    rng = np.random.default_rng(seed)
    A = SparseMatrixCSR.from_dense(rng.uniform(0.0, 1.0, size=(m, n)))
    direction = rng.standard_normal(n)
    radius = rng.uniform() ** (1.0 / n)
    x_star = direction / np.linalg.norm(direction) * radius
    b = matvec(A, x_star)
    return Dataset(
        A=A,
        b=b,
        name=f"qp-{m}x{n}-s{seed}",
        provenance=f"seed={seed}",
        x_star=x_star,
        optimal_value=0.0,
    )


def random_sqrt_lasso_instance(m: int, n: int, seed: int, noise: float = 0.5) -> Dataset:
    """Gaussian design, sparse truth, Gaussian noise."""
    _check_shape(m, n, seed)
    rng = np.random.default_rng(seed)
    A = SparseMatrixCSR.from_dense(rng.standard_normal((m, n)))
    b = matvec(A, _sparse_truth(rng, n)) + noise * rng.standard_normal(m)
    return Dataset(A=A, b=b, name=f"sqrt_lasso-{m}x{n}-s{seed}", provenance=f"seed={seed}")


def random_logistic_instance(m: int, n: int, seed: int, density: float = 0.1) -> Dataset:
    """Sparse Gaussian features, labels drawn from a sparse linear model."""
    _check_shape(m, n, seed)
    rng = np.random.default_rng(seed)
    dense = np.where(rng.random((m, n)) < density, rng.standard_normal((m, n)), 0.0)
    A = SparseMatrixCSR.from_dense(dense)
    p = expit(matvec(A, _sparse_truth(rng, n)))
    labels = np.where(rng.random(m) < p, 1.0, -1.0)
    return Dataset(A=A, b=labels, name=f"logistic-{m}x{n}-s{seed}", provenance=f"seed={seed}", task="classification")
