"""Adaptive proximal gradient descent (AdGD).

With L_k = ||g_k - g_{k-1}|| / ||x_k - x_{k-1}|| (0/0 = 0) the stepsize is

    lambda_k = min{ sqrt(2/3 + theta_{k-1}) lambda_{k-1},
                    lambda_{k-1} / sqrt([2 lambda_{k-1}^2 L_k^2 - 1]_+) }
    theta_k  = lambda_k / lambda_{k-1}

and x_{k+1} = prox(h, x_k, g_k, lambda_k). theta starts at 1/3 so the first
growth factor is 1. lambda_0 = 1/L0 from the probe, divided by gamma until
the bootstrap step satisfies lambda_0 L_1 <= 1/sqrt(2); trials beyond the
accepted one are booked to initialization.

lambda never exceeds MAX_STEPSIZE. A step that returns its own centre marks
the run stationary; further iterations keep the point and the stepsize.
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from acfgm.baselines.common import evaluate, start_point
from acfgm.baselines.config import BaselineConfig
from acfgm.core.problem import CompositeProblem
from acfgm.core.prox import prox_step
from acfgm.errors import DivergedError
from acfgm.solver.initial import probe_curvature
from acfgm.solver.stepsize import MAX_STEPSIZE

log = logging.getLogger(__name__)

_INV_SQRT2 = 1.0 / math.sqrt(2.0)


@dataclass
class AdgdState:
    x: np.ndarray
    f: float
    g: np.ndarray
    x_prev: np.ndarray
    g_prev: np.ndarray
    lam: float
    theta: float = 1.0 / 3.0
    t: int = 0
    L_last: float = 0.0
    oracle_calls: int = 0
    init_calls: int = 0
    stationary: bool = False
    pending: Optional[tuple[np.ndarray, float, np.ndarray]] = None


def _secant(x_new, x_old, g_new, g_old) -> float:
    dx = float(np.linalg.norm(x_new - x_old))
    dg = float(np.linalg.norm(g_new - g_old))
    if dx == 0:
        return 0.0 if dg == 0 else math.inf
    return dg / dx


def adgd_start(problem: CompositeProblem, x0, config: BaselineConfig) -> AdgdState:
    x = start_point(problem, x0)
    f0, g0 = evaluate(problem, x, 0)
    L0, calls = probe_curvature(problem, x, g0, None, None, 1e-12)
    calls += 1
    lam = 1.0 / L0
    for trial in range(config.max_trials):
        x1 = prox_step(problem.prox_term, x, g0, lam)
        f1, g1 = evaluate(problem, x1, 1)
        if lam * _secant(x1, x, g1, g0) <= _INV_SQRT2:
            log.debug("bootstrap accepted after %d trial(s): lambda0=%.6g", trial + 1, lam)
            booked = calls + trial
            return AdgdState(
                x=x,
                f=f0,
                g=g0,
                x_prev=x,
                g_prev=g0,
                lam=lam,
                L_last=_secant(x1, x, g1, g0),
                oracle_calls=booked,
                init_calls=booked,
                pending=(x1, f1, g1),
            )
        lam /= config.gamma
    raise DivergedError(f"AdGD bootstrap exceeded {config.max_trials} trials", iteration=1, trials=config.max_trials)


def adgd_iterate(state: AdgdState, problem: CompositeProblem) -> AdgdState:
    t = state.t + 1
    if state.pending is not None:
        x_new, f_new, g_new = state.pending
        state.pending = None
        lam = state.lam
    else:
        L = _secant(state.x, state.x_prev, state.g, state.g_prev)
        if state.stationary:
            lam = state.lam
        else:
            lam = min(math.sqrt(2.0 / 3.0 + state.theta) * state.lam, MAX_STEPSIZE)
            product = state.lam * L
            if product > _INV_SQRT2:
                lam = min(lam, state.lam / math.sqrt(2.0 * product * product - 1.0))
        state.theta = lam / state.lam
        state.L_last = L
        x_new = prox_step(problem.prox_term, state.x, state.g, lam)
        f_new, g_new = evaluate(problem, x_new, t)
    if np.array_equal(x_new, state.x):
        state.stationary = True
    state.oracle_calls += 1
    state.x_prev, state.g_prev = state.x, state.g
    state.x, state.f, state.g = x_new, f_new, g_new
    state.lam = lam
    state.t = t
    return state
