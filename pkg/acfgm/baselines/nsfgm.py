"""Universal fast gradient method (NS-FGM).

Estimate sequence with A_0 = 0, s_0 = 0, v_k = prox(h, x0, s_k / A_k, A_k)
(v_0 = x0). Each trial with curvature guess M:

    a   solves M a^2 = A_k + a,   A+ = A_k + a,   tau = a / A+
    x   = tau v_k + (1 - tau) y_k                      oracle call 1
    x^  = prox(h, v_k, g(x), a)
    y+  = tau x^ + (1 - tau) y_k                       oracle call 2
    accept if f(y+) <= f(x) + <g(x), y+ - x> + M/2 ||y+ - x||^2 + eps tau / 2

otherwise M *= gamma. On acceptance s += a g(x), A = A+, and the next
guess is M / gamma. Every trial costs two oracle calls.
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from acfgm.baselines.common import evaluate, start_point
from acfgm.baselines.config import BaselineConfig, roundoff_slack
from acfgm.core.problem import CompositeProblem
from acfgm.core.prox import prox_step
from acfgm.errors import DivergedError
from acfgm.solver.initial import probe_curvature

log = logging.getLogger(__name__)


@dataclass
class NsfgmState:
    x0: np.ndarray
    y: np.ndarray
    f_y: float
    v: np.ndarray
    grad_sum: np.ndarray
    L_guess: float
    gamma: float
    epsilon: float
    max_trials: int
    A: float = 0.0
    t: int = 0
    M: float = 0.0
    tau: float = 0.0
    trials: int = 0
    oracle_calls: int = 0
    init_calls: int = 0


def nsfgm_start(problem: CompositeProblem, x0, config: BaselineConfig, L0: Optional[float] = None) -> NsfgmState:
    x = start_point(problem, x0)
    f0, g0 = evaluate(problem, x, 0)
    calls = 1
    if L0 is None:
        L0, used = probe_curvature(problem, x, g0, None, None, 1e-12)
        calls += used
    return NsfgmState(
        x0=x,
        y=x,
        f_y=f0,
        v=x,
        grad_sum=np.zeros_like(x),
        L_guess=L0,
        gamma=config.gamma,
        epsilon=config.epsilon,
        max_trials=config.max_trials,
        oracle_calls=calls,
        init_calls=calls,
    )


def nsfgm_iterate(state: NsfgmState, problem: CompositeProblem) -> NsfgmState:
    t = state.t + 1
    M = state.L_guess
    for trial in range(1, state.max_trials + 1):
        a = (1.0 + math.sqrt(1.0 + 4.0 * M * state.A)) / (2.0 * M)
        A_new = state.A + a
        tau = a / A_new
        x = tau * state.v + (1.0 - tau) * state.y
        f_x, g_x = evaluate(problem, x, t)
        x_hat = prox_step(problem.prox_term, state.v, g_x, a)
        y_new = tau * x_hat + (1.0 - tau) * state.y
        f_y, _ = evaluate(problem, y_new, t)
        state.oracle_calls += 2
        d = y_new - x
        model = f_x + float(np.dot(g_x, d)) + 0.5 * M * float(np.dot(d, d))
        if f_y <= model + 0.5 * state.epsilon * tau + roundoff_slack(f_x, f_y):
            break
        M *= state.gamma
    else:
        raise DivergedError(
            f"NS-FGM line search exceeded {state.max_trials} trials", iteration=t, trials=state.max_trials
        )
    if log.isEnabledFor(logging.DEBUG):
        log.debug("t=%d M=%.6g trials=%d f(y)=%.10g", t, M, trial, f_y)
    state.grad_sum = state.grad_sum + a * g_x
    state.A = A_new
    state.v = prox_step(problem.prox_term, state.x0, state.grad_sum / state.A, state.A)
    state.y, state.f_y = y_new, f_y
    state.M, state.tau, state.trials = M, tau, trial
    state.L_guess = M / state.gamma
    state.t = t
    return state
