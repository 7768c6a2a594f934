"""First-order oracles for the benchmark problem families.

    least squares     f(x) = (1/m) ||Ax - b||^2                     h = 0
    lasso             f as above                                    h = lam ||x||_1
    sqrt lasso        f(x) = m^(-1/2) ||Ax - b||                    h = lam ||x||_1
    logistic          f(x) = sum_i log(1 + exp(-b_i <a_i, x>))      h = lam ||x||_1
"""

import functools
import math

import numpy as np
from scipy.special import expit

from acfgm.core.linalg import matvec, matvec_t
from acfgm.core.problem import CompositeProblem
from acfgm.core.prox import ProxTerm
from acfgm.errors import ConfigError, IngestionError
from acfgm.problems.dataset import Dataset
from acfgm.problems.spectral import power_iteration


def _check_penalty(lam: float) -> float:
    lam = float(lam)
    if not lam >= 0 or not math.isfinite(lam):
        raise ConfigError(f"penalty must be a finite number >= 0, got {lam}")
    return lam


def _squared_loss(data: Dataset, prox_term: ProxTerm, name: str) -> CompositeProblem:
    A, b, m = data.A, data.b, data.m

    def oracle(x):
        r = matvec(A, x) - b
        return float(np.dot(r, r)) / m, (2.0 / m) * matvec_t(A, r)

    def value(x):
        r = matvec(A, x) - b
        return float(np.dot(r, r)) / m

    @functools.cache
    def lipschitz():
        return 2.0 * power_iteration(lambda x: matvec(A, x), lambda v: matvec_t(A, v), data.n) / m

    return CompositeProblem(oracle, prox_term, data.n, name=name, smooth_value=value, lipschitz_bound=lipschitz)


def least_squares_oracle(data: Dataset) -> CompositeProblem:
    return _squared_loss(data, ProxTerm.zero(), f"qp:{data.name}")


def lasso_oracle(data: Dataset, lam: float) -> CompositeProblem:
    lam = _check_penalty(lam)
    return _squared_loss(data, ProxTerm.l1(lam), f"lasso:{data.name}")


def sqrt_lasso_oracle(data: Dataset, lam: float) -> CompositeProblem:
    lam = _check_penalty(lam)
    A, b = data.A, data.b
    root_m = math.sqrt(data.m)

    def oracle(x):
        r = matvec(A, x) - b
        norm = float(np.linalg.norm(r))
        if norm == 0.0:
            # zero is a subgradient of the norm at its minimum
            return 0.0, np.zeros(data.n)
        return norm / root_m, matvec_t(A, r) / (root_m * norm)

    def value(x):
        return float(np.linalg.norm(matvec(A, x) - b)) / root_m

    return CompositeProblem(oracle, ProxTerm.l1(lam), data.n, name=f"sqrt_lasso:{data.name}", smooth_value=value)


def softplus(u: np.ndarray) -> np.ndarray:
    """log(1 + exp(u)) without overflow."""
    return np.maximum(u, 0.0) + np.log1p(np.exp(-np.abs(u)))


def logistic_oracle(data: Dataset, lam: float) -> CompositeProblem:
    lam = _check_penalty(lam)
    if not np.all(np.abs(data.b) == 1.0):
        raise IngestionError(f"{data.name}: logistic regression needs labels in {{-1, +1}}")
    K = data.A.scale_rows(-data.b)

    def oracle(x):
        u = matvec(K, x)
        return float(np.sum(softplus(u))), matvec_t(K, expit(u))

    def value(x):
        return float(np.sum(softplus(matvec(K, x))))

    @functools.cache
    def lipschitz():
        return power_iteration(lambda x: matvec(K, x), lambda v: matvec_t(K, v), data.n) / 4.0

    return CompositeProblem(
        oracle, ProxTerm.l1(lam), data.n, name=f"logistic:{data.name}", smooth_value=value, lipschitz_bound=lipschitz
    )
