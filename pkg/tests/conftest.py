"""Shared fixtures: small closed-form problems with known answers."""

import numpy as np
import pytest

from acfgm.core.linalg import SparseMatrixCSR
from acfgm.core.problem import CompositeProblem
from acfgm.core.prox import ProxTerm
from acfgm.problems.dataset import Dataset
from acfgm.problems.generate import random_qp_instance


def make_quadratic(scale=1.0, n=1, prox=None, name="quadratic"):
    """f(x) = scale/2 ||x||^2, gradient scale * x."""

    def oracle(x):
        return 0.5 * scale * float(np.dot(x, x)), scale * np.asarray(x, dtype=np.float64)

    return CompositeProblem(oracle, prox or ProxTerm.zero(), n, name=name, lipschitz_bound=lambda: float(scale))


def make_linear(slope, prox=None, name="linear"):
    slope = np.asarray(slope, dtype=np.float64)

    def oracle(x):
        return float(np.dot(slope, x)), slope.copy()

    return CompositeProblem(oracle, prox or ProxTerm.zero(), slope.shape[0], name=name)


@pytest.fixture
def quadratic():
    return make_quadratic()


@pytest.fixture
def qp_data():
    return random_qp_instance(30, 20, seed=5)


@pytest.fixture
def tiny_dataset():
    A = SparseMatrixCSR.from_dense([[1.0, 2.0], [0.0, 3.0], [1.0, -1.0]])
    return Dataset(A=A, b=np.array([1.0, -1.0, 1.0]), name="tiny", provenance="inline", task="classification")
