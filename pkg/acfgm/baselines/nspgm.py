"""Universal primal gradient method (NS-PGM).

Each iteration backtracks on M, starting from the current guess:

    x+ = prox(h, x, g(x), 1/M)
    accept if f(x+) <= f(x) + <g(x), x+ - x> + M/2 ||x+ - x||^2 + eps/2

otherwise M *= gamma. After acceptance the next guess is M / gamma. One
oracle call per trial; g(x) is carried over from the accepted trial.
"""

import logging
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
class NspgmState:
    x: np.ndarray
    f: float
    g: np.ndarray
    L_guess: float
    gamma: float
    epsilon: float
    max_trials: int
    t: int = 0
    M: float = 0.0
    trials: int = 0
    oracle_calls: int = 0
    init_calls: int = 0


def nspgm_start(problem: CompositeProblem, x0, config: BaselineConfig, L0: Optional[float] = None) -> NspgmState:
    x = start_point(problem, x0)
    f0, g0 = evaluate(problem, x, 0)
    calls = 1
    if L0 is None:
        L0, used = probe_curvature(problem, x, g0, None, None, 1e-12)
        calls += used
    return NspgmState(
        x=x,
        f=f0,
        g=g0,
        L_guess=L0,
        gamma=config.gamma,
        epsilon=config.epsilon,
        max_trials=config.max_trials,
        oracle_calls=calls,
        init_calls=calls,
    )


def accepts(f_new: float, f: float, g: np.ndarray, d: np.ndarray, M: float, epsilon: float) -> bool:
    model = f + float(np.dot(g, d)) + 0.5 * M * float(np.dot(d, d))
    return f_new <= model + 0.5 * epsilon + roundoff_slack(f, f_new)


def nspgm_iterate(state: NspgmState, problem: CompositeProblem) -> NspgmState:
    t = state.t + 1
    M = state.L_guess
    for trial in range(1, state.max_trials + 1):
        x_new = prox_step(problem.prox_term, state.x, state.g, 1.0 / M)
        f_new, g_new = evaluate(problem, x_new, t)
        state.oracle_calls += 1
        if accepts(f_new, state.f, state.g, x_new - state.x, M, state.epsilon):
            break
        M *= state.gamma
    else:
        raise DivergedError(
            f"NS-PGM line search exceeded {state.max_trials} trials", iteration=t, trials=state.max_trials
        )
    if log.isEnabledFor(logging.DEBUG):
        log.debug("t=%d M=%.6g trials=%d f=%.10g", t, M, trial, f_new)
    state.x, state.f, state.g = x_new, f_new, g_new
    state.M, state.trials = M, trial
    state.L_guess = M / state.gamma
    state.t = t
    return state
