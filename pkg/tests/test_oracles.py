"""Problem oracles, generators and the spectral bound."""

import math

import numpy as np
import pytest

from acfgm.core.linalg import SparseMatrixCSR
from acfgm.errors import ConfigError, IngestionError, InvalidInputError
from acfgm.problems.dataset import Dataset
from acfgm.problems.generate import random_logistic_instance, random_qp_instance, random_sqrt_lasso_instance
from acfgm.problems.oracles import lasso_oracle, least_squares_oracle, logistic_oracle, softplus, sqrt_lasso_oracle
from acfgm.problems.spectral import power_iteration
from acfgm.solver import SolverConfig, acfgm_solve


def _dataset(dense, b, task="regression"):
    A = SparseMatrixCSR.from_dense(dense)
    return Dataset(A=A, b=np.asarray(b, dtype=float), name="t", provenance="inline", task=task)


def _fd_gradient(problem, x, h=1e-6):
    grad = np.zeros_like(x)
    for i in range(x.shape[0]):
        e = np.zeros_like(x)
        e[i] = h
        grad[i] = (problem.value(x + e) - problem.value(x - e)) / (2 * h)
    return grad


@pytest.fixture(scope="module")
def smooth_problems():
    qp = random_qp_instance(25, 8, seed=1)
    logistic = random_logistic_instance(60, 8, seed=2, density=0.5)
    return [least_squares_oracle(qp), lasso_oracle(qp, 0.1), logistic_oracle(logistic, 0.01)]


def test_least_squares_by_hand():
    problem = least_squares_oracle(_dataset([[1.0]], [0.0]))
    f, g = problem.oracle(np.array([2.0]))
    assert f == 4.0
    np.testing.assert_array_equal(g, [4.0])


def test_least_squares_vanishes_at_planted_solution(qp_data):
    f, g = least_squares_oracle(qp_data).oracle(qp_data.x_star)
    assert f == pytest.approx(0.0, abs=1e-28)
    np.testing.assert_allclose(g, 0.0, atol=1e-14)


def test_finite_difference_gradients(smooth_problems):
    rng = np.random.default_rng(0)
    for problem in smooth_problems:
        for _ in range(20):
            x = rng.standard_normal(problem.dimension)
            _, g = problem.oracle(x)
            fd = _fd_gradient(problem, x)
            assert np.linalg.norm(fd - g) <= 1e-6 * max(np.linalg.norm(g), 1.0)


def test_smooth_parts_are_midpoint_convex(smooth_problems):
    rng = np.random.default_rng(1)
    for problem in smooth_problems:
        for _ in range(1000):
            x, y = rng.standard_normal((2, problem.dimension))
            mid = problem.value(0.5 * x + 0.5 * y)
            assert mid <= 0.5 * problem.value(x) + 0.5 * problem.value(y) + 1e-10


def test_lasso_with_zero_penalty_matches_least_squares(qp_data):
    rng = np.random.default_rng(2)
    plain, lasso = least_squares_oracle(qp_data), lasso_oracle(qp_data, 0.0)
    for _ in range(10):
        x = rng.standard_normal(qp_data.n)
        assert lasso.objective(x) == plain.objective(x)


def test_lasso_objective_at_zero(qp_data):
    expected = float(np.dot(qp_data.b, qp_data.b)) / qp_data.m
    assert lasso_oracle(qp_data, 0.3).objective(np.zeros(qp_data.n)) == pytest.approx(expected)


def test_lasso_rejects_negative_penalty(qp_data):
    with pytest.raises(ConfigError):
        lasso_oracle(qp_data, -0.1)


def test_lasso_solution_matches_grid_search():
    problem = lasso_oracle(_dataset([[2.0, 0.5], [0.3, 1.5]], [1.0, -1.0]), 0.1)
    state = acfgm_solve(problem, np.zeros(2), SolverConfig(max_iter=3000))

    def psi(u, v):
        r1 = 2.0 * u + 0.5 * v - 1.0
        r2 = 0.3 * u + 1.5 * v + 1.0
        return (r1**2 + r2**2) / 2.0 + 0.1 * (np.abs(u) + np.abs(v))

    coarse = np.arange(-2.0, 2.0, 1e-2)
    U, V = np.meshgrid(coarse, coarse, indexing="ij")
    i, j = np.unravel_index(np.argmin(psi(U, V)), U.shape)
    fine_u = np.arange(coarse[i] - 2e-2, coarse[i] + 2e-2, 1e-3)
    fine_v = np.arange(coarse[j] - 2e-2, coarse[j] + 2e-2, 1e-3)
    U, V = np.meshgrid(fine_u, fine_v, indexing="ij")
    values = psi(U, V)
    i, j = np.unravel_index(np.argmin(values), U.shape)

    assert problem.objective(state.x) <= values[i, j] + 1e-12
    assert np.max(np.abs(state.x - np.array([U[i, j], V[i, j]]))) <= 2e-3


def test_sqrt_lasso_by_hand():
    problem = sqrt_lasso_oracle(_dataset([[1.0]], [0.0]), 0.5)
    f, g = problem.oracle(np.array([3.0]))
    assert f == 3.0
    np.testing.assert_array_equal(g, [1.0])
    assert problem.objective(np.array([3.0])) == 4.5


def test_sqrt_lasso_zero_residual_subgradient():
    problem = sqrt_lasso_oracle(_dataset([[1.0, 0.0], [0.0, 2.0]], [1.0, 2.0]), 0.1)
    f, g = problem.oracle(np.array([1.0, 1.0]))
    assert f == 0.0
    np.testing.assert_array_equal(g, [0.0, 0.0])


def test_sqrt_lasso_subgradient_inequality():
    data = random_sqrt_lasso_instance(30, 6, seed=3)
    problem = sqrt_lasso_oracle(data, 0.1)
    rng = np.random.default_rng(4)
    for _ in range(10_000):
        x, y = rng.standard_normal((2, data.n))
        fx, gx = problem.oracle(x)
        assert problem.value(y) >= fx + float(np.dot(gx, y - x)) - 1e-12


def test_sqrt_lasso_has_no_global_constant():
    data = random_sqrt_lasso_instance(10, 4, seed=0)
    assert sqrt_lasso_oracle(data, 0.1).lipschitz_bound is None


def test_logistic_at_origin(tiny_dataset):
    problem = logistic_oracle(tiny_dataset, 0.0)
    f, g = problem.oracle(np.zeros(2))
    assert f == pytest.approx(3 * math.log(2.0))
    A, b = tiny_dataset.A.to_dense(), tiny_dataset.b
    np.testing.assert_allclose(g, -0.5 * (b[:, None] * A).sum(axis=0))


def test_logistic_is_stable_on_large_margins(tiny_dataset):
    problem = logistic_oracle(tiny_dataset, 0.0)
    f, g = problem.oracle(np.array([1e4, -1e4]))
    assert math.isfinite(f)
    assert np.all(np.isfinite(g))
    np.testing.assert_allclose(softplus(np.array([-800.0, 0.0, 800.0])), [0.0, math.log(2.0), 800.0])


def test_logistic_upper_bound_is_a_descent_constant():
    data = random_logistic_instance(50, 6, seed=5, density=0.6)
    problem = logistic_oracle(data, 0.0)
    L = problem.lipschitz_bound()
    rng = np.random.default_rng(6)
    for _ in range(1000):
        x, y = rng.standard_normal((2, data.n))
        fx, gx = problem.oracle(x)
        d = y - x
        assert problem.value(y) <= fx + float(np.dot(gx, d)) + 0.5 * L * float(np.dot(d, d)) + 1e-9


def test_logistic_rejects_bad_labels():
    data = _dataset([[1.0], [2.0]], [0.0, 3.0])
    with pytest.raises(IngestionError):
        logistic_oracle(data, 0.1)


def test_power_iteration_matches_dense_eigenvalue():
    rng = np.random.default_rng(7)
    K = rng.standard_normal((15, 6))
    expected = float(np.linalg.eigvalsh(K.T @ K)[-1])
    value = power_iteration(lambda x: K @ x, lambda v: K.T @ v, 6)
    assert value == pytest.approx(expected, rel=1e-6)


def test_least_squares_lipschitz_bound(qp_data):
    dense = qp_data.A.to_dense()
    expected = 2.0 * float(np.linalg.eigvalsh(dense.T @ dense)[-1]) / qp_data.m
    assert least_squares_oracle(qp_data).lipschitz_bound() == pytest.approx(expected, rel=1e-6)


def test_qp_generator_is_deterministic():
    first, second = random_qp_instance(10, 7, seed=42), random_qp_instance(10, 7, seed=42)
    assert first.same_content(second)
    np.testing.assert_array_equal(first.x_star, second.x_star)
    assert not first.same_content(random_qp_instance(10, 7, seed=43))


def test_qp_generator_plants_a_solution_in_the_unit_ball():
    for seed in range(20):
        data = random_qp_instance(12, 9, seed=seed)
        assert np.linalg.norm(data.x_star) <= 1.0
        assert least_squares_oracle(data).value(data.x_star) == 0.0
        assert data.optimal_value == 0.0
        assert np.all((data.A.values >= 0.0) & (data.A.values <= 1.0))


def test_generators_validate_shape():
    with pytest.raises(InvalidInputError):
        random_qp_instance(0, 3, seed=1)
    with pytest.raises(InvalidInputError):
        random_logistic_instance(3, 3, seed=-1)


def test_logistic_generator_labels():
    data = random_logistic_instance(40, 10, seed=9)
    assert data.task == "classification"
    assert set(np.unique(data.b)) <= {-1.0, 1.0}


def test_dataset_invariants():
    A = SparseMatrixCSR.from_dense([[1.0], [2.0]])
    with pytest.raises(IngestionError):
        Dataset(A=A, b=np.ones(3), name="bad", provenance="inline")
    with pytest.raises(IngestionError):
        Dataset(A=A, b=np.array([1.0, 0.0]), name="bad", provenance="inline", task="classification")
    with pytest.raises(IngestionError):
        Dataset(A=A, b=np.ones(2), name="bad", provenance="inline", task="ranking")
