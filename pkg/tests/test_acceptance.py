"""End-to-end checks on seeded instances: certificates, rates, schedules and accounting.

These runs are larger than the unit tests; each instance is small enough
that the whole module finishes in well under a few minutes.
"""

import math

import numpy as np
import pytest

from acfgm.baselines import BaselineConfig, nsagd_iterate, nsagd_start, nsfgm_iterate, nsfgm_start
from acfgm.harness.summary import convergence_slope
from acfgm.harness.trace import Trace, TraceRecord
from acfgm.problems.families import get_family
from acfgm.problems.generate import random_qp_instance
from acfgm.problems.oracles import least_squares_oracle
from acfgm.solver import (
    Adaptive,
    FirstIterLineSearch,
    FromL0,
    Hoelder,
    Simple,
    SolverConfig,
    acfgm_iterate,
    acfgm_start,
    averaged_iterate,
    certificate,
    solution,
    validate_schedule,
)

QP_SEEDS = range(20)
CHECKPOINTS = (10, 50, 100, 500, 1000)
SLOPE_WINDOW = (100, 1000)
# gaps at this level are roundoff, not progress
GAP_FLOOR = 1e-20


def _qp(seed):
    data = random_qp_instance(100, 200, seed=seed)
    return data, least_squares_oracle(data)


def _gap_trace(gaps):
    trace = Trace(solver="-", method="-", problem="-")
    trace.records = [TraceRecord(k, 0, 0.0, g, gap=g) for k, g in enumerate(gaps, start=1)]
    return trace


def _slope(gaps):
    return convergence_slope(_gap_trace(gaps), *SLOPE_WINDOW, floor=GAP_FLOOR)


def _acfgm_gaps(problem, config, iterations, reference=0.0):
    state = acfgm_start(problem, np.zeros(problem.dimension), config)
    gaps = []
    for _ in range(iterations):
        acfgm_iterate(state, problem)
        gaps.append(problem.objective(solution(state)) - reference)
    return state, gaps


@pytest.mark.parametrize("seed", QP_SEEDS)
def test_qp_certificate_holds_at_checkpoints(seed):
    data, problem = _qp(seed)
    distance_sq = float(np.dot(data.x_star, data.x_star))
    state = acfgm_start(problem, np.zeros(data.n), SolverConfig())
    violations = []
    for k in range(1, CHECKPOINTS[-1] + 1):
        acfgm_iterate(state, problem)
        if k in CHECKPOINTS:
            cert = certificate(state, distance_sq)
            gap = problem.objective(state.x)
            if gap > cert.bound_last_iterate:
                violations.append((k, gap, cert.bound_last_iterate))
            if problem.objective(averaged_iterate(state)) > cert.bound_avg_iterate:
                violations.append((k, "avg", cert.bound_avg_iterate))
    assert violations == []


@pytest.mark.parametrize("policy", [Simple(), Adaptive(0.0), Adaptive(0.1), Adaptive(0.5)], ids=str)
def test_qp_rate_is_accelerated(policy):
    for seed in QP_SEEDS:
        _, problem = _qp(seed)
        state, gaps = _acfgm_gaps(problem, SolverConfig(policy=policy, record_history=True), SLOPE_WINDOW[1])
        slope = _slope(gaps)
        # None: the gap reached roundoff before the window opened
        assert slope is None or slope <= -1.5, f"seed {seed}: slope {slope:.3f}"
        history = state.history
        assert validate_schedule(history.etas, history.taus, history.curvatures, state.beta, history.betas) == []


def test_fixed_step_reference_is_slower():
    """Plain proximal gradient with step 1/L decays visibly slower than AC-FGM on most instances."""
    separated = 0
    for seed in QP_SEEDS:
        _, problem = _qp(seed)
        _, ac_gaps = _acfgm_gaps(problem, SolverConfig(), SLOPE_WINDOW[1])
        state = nsagd_start(problem, np.zeros(problem.dimension), BaselineConfig("nsagd", accelerated=False))
        gd_gaps = []
        for _ in range(SLOPE_WINDOW[1]):
            nsagd_iterate(state, problem)
            gd_gaps.append(problem.objective(state.y))
        gd_slope = _slope(gd_gaps)
        ac_slope = _slope(ac_gaps)
        assert gd_slope is not None
        if ac_slope is None or gd_slope >= ac_slope + 0.2:
            separated += 1
    assert separated >= len(QP_SEEDS) // 2


def _hat_ls(state):
    hat = [1.0 / (4.0 * (1.0 - state.beta) * state.history.etas[0])]
    for L in state.history.curvatures:
        hat.append(max(hat[-1], L))
    return hat


@pytest.mark.parametrize("seed", [0, 7, 13])
@pytest.mark.parametrize("alpha", [None, 0.0, 0.1, 0.5])
def test_stepsize_lower_bounds_hold_exactly(seed, alpha):
    _, problem = _qp(seed)
    policy = Simple() if alpha is None else Adaptive(alpha)
    state, _ = _acfgm_gaps(problem, SolverConfig(policy=policy, record_history=True), 500)
    history = state.history
    hat = _hat_ls(state)
    for t in range(2, len(history.etas) + 1):
        eta_t, tau_t = history.etas[t - 1], history.taus[t - 1]
        if alpha is None:
            assert eta_t >= t / (12.0 * hat[t - 1]) * (1.0 - 1e-12)
        else:
            assert tau_t <= t / 2.0 * (1.0 + 1e-12)
            assert eta_t >= (3.0 + alpha * (t - 3)) / (12.0 * hat[t - 1]) * (1.0 - 1e-12)


EQUIVALENCE_PROBLEMS = [
    ("qp", 40, 60, 1),
    ("qp", 80, 30, 2),
    ("lasso", 60, 80, 3),
    ("logistic", 120, 30, 4),
    ("lasso", 30, 30, 5),
]


@pytest.mark.parametrize("family,m,n,seed", EQUIVALENCE_PROBLEMS)
def test_adaptive_alpha_one_reproduces_simple(family, m, n, seed):
    fam = get_family(family)
    problem, _ = fam.problem(fam.generate(m, n, seed))
    runs = []
    for policy in (Simple(), Adaptive(1.0)):
        state = acfgm_start(problem, np.zeros(n), SolverConfig(policy=policy, record_history=True))
        values = []
        for _ in range(100):
            acfgm_iterate(state, problem)
            values.append(problem.objective(state.x))
        runs.append((state.history, values))
    (simple, simple_values), (adaptive, adaptive_values) = runs
    np.testing.assert_allclose(adaptive.etas, simple.etas, rtol=1e-12)
    np.testing.assert_allclose(adaptive.taus, simple.taus, rtol=1e-12)
    np.testing.assert_allclose(adaptive_values, simple_values, rtol=1e-12, atol=1e-300)


def test_hoelder_certificate_on_sqrt_lasso():
    family = get_family("sqrt_lasso")
    problem, _ = family.problem(family.generate(200, 50, 9))
    x0 = np.zeros(50)
    epsilon = 1e-6

    # any comparison point is valid in the bound; a long run gives a tight one
    reference_state = acfgm_start(problem, x0, SolverConfig(policy=Hoelder(epsilon)))
    for _ in range(20000):
        acfgm_iterate(reference_state, problem)
    x_ref = solution(reference_state)
    psi_ref = problem.objective(x_ref)
    distance_sq = float(np.dot(x_ref - x0, x_ref - x0))

    state = acfgm_start(problem, x0, SolverConfig(policy=Hoelder(epsilon)))
    violations = []
    for k in range(1, 2001):
        acfgm_iterate(state, problem)
        if k % 10 == 0 or k < 10:
            bound = certificate(state, distance_sq).bound_avg_iterate
            gap = problem.objective(averaged_iterate(state)) - psi_ref
            if gap > bound:
                violations.append((k, gap, bound))
    assert violations == []
    assert bound > epsilon / 2


def test_nsfgm_calls_per_iteration_on_qp():
    averages = []
    for seed in range(5):
        _, problem = _qp(seed)
        state = nsfgm_start(problem, np.zeros(problem.dimension), BaselineConfig("nsfgm"))
        for _ in range(150):
            nsfgm_iterate(state, problem)
        averages.append((state.oracle_calls - state.init_calls) / state.t)
    assert 3.0 <= float(np.mean(averages)) <= 5.0


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_first_iteration_line_search_matches_l0_start(seed):
    _, problem = _qp(seed)
    finals = []
    for init in (FromL0(), FirstIterLineSearch()):
        _, gaps = _acfgm_gaps(problem, SolverConfig(init=init), 200)
        finals.append(max(gaps[-1], GAP_FLOOR))
    ratio = finals[0] / finals[1]
    assert 0.1 < ratio < 10.0
    assert all(math.isfinite(g) for g in finals)
