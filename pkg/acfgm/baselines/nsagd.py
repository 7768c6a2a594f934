"""Accelerated gradient descent with a known global constant L (NS-AGD).

Three-sequence form with q_t = alpha_t = 2/(t+1) and stepsize t/(2L):

    x_t = (1 - q_t) y_{t-1} + q_t z_{t-1}
    z_t = prox(h, z_{t-1}, g(x_t), t / (2L))
    y_t = (1 - alpha_t) y_{t-1} + alpha_t z_t

With ``accelerated=False`` q = alpha = 1 and the stepsize is 1/L, which is
fixed-step proximal gradient descent.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from acfgm.baselines.common import evaluate, start_point
from acfgm.baselines.config import BaselineConfig
from acfgm.core.problem import CompositeProblem
from acfgm.core.prox import prox_step
from acfgm.errors import ConfigError


@dataclass
class NsagdState:
    x: np.ndarray
    y: np.ndarray
    z: np.ndarray
    L: float
    accelerated: bool = True
    t: int = 0
    f: float = 0.0
    eta: float = 0.0
    oracle_calls: int = 0
    init_calls: int = 0


def resolve_lipschitz(problem: CompositeProblem, config: BaselineConfig) -> float:
    if config.lipschitz is not None:
        return config.lipschitz
    if problem.lipschitz_bound is None:
        raise ConfigError(f"NS-AGD needs a Lipschitz constant and {problem.name} does not provide one")
    return float(problem.lipschitz_bound())


def nsagd_start(problem: CompositeProblem, x0, config: BaselineConfig) -> NsagdState:
    x = start_point(problem, x0)
    L = resolve_lipschitz(problem, config)
    if not L > 0:
        raise ConfigError(f"NS-AGD needs L > 0, got {L}")
    return NsagdState(x=x, y=x, z=x, L=L, accelerated=config.accelerated)


def nsagd_iterate(state: NsagdState, problem: CompositeProblem, L: Optional[float] = None) -> NsagdState:
    L = state.L if L is None else L
    t = state.t + 1
    if state.accelerated:
        q = 2.0 / (t + 1)
        eta = t / (2.0 * L)
    else:
        q = 1.0
        eta = 1.0 / L
    x = (1.0 - q) * state.y + q * state.z
    f, g = evaluate(problem, x, t)
    state.oracle_calls += 1
    z = prox_step(problem.prox_term, state.z, g, eta)
    state.y = (1.0 - q) * state.y + q * z
    state.x, state.z, state.f = x, z, f
    state.eta = eta
    state.t = t
    return state
