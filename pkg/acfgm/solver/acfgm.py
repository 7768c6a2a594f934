"""The auto-conditioned fast gradient method.

One iteration t >= 1 performs

    z_t = prox(h, y_{t-1}, g(x_{t-1}), eta_t)
    y_t = (1 - beta_t) y_{t-1} + beta_t z_t          beta_1 = 0
    x_t = (z_t + tau_t x_{t-1}) / (1 + tau_t)       tau_1 = 0

followed by a single oracle call at x_t, a local curvature estimate and the
eager computation of eta_{t+1}, tau_{t+1}. The state keeps running sums for
the weighted average of the x_t so it can be read at any iteration.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from acfgm.core.problem import CompositeProblem, is_finite_pair
from acfgm.core.prox import prox_step
from acfgm.errors import DivergedError, InvalidInputError, InvalidStateError
from acfgm.solver.curvature import curvature_first, curvature_hoelder, curvature_smooth
from acfgm.solver.initial import InitResult, initial_stepsize
from acfgm.solver.policy import Hoelder, PolicyKind, SolverConfig, policy_epsilon, schedule_alpha
from acfgm.solver.stepsize import stepsize_adaptive, stepsize_simple

log = logging.getLogger(__name__)


@dataclass
class ScheduleHistory:
    """eta_1..eta_{k+1}, tau_1..tau_{k+1}, L_1..L_k and beta_1..beta_k."""

    etas: list[float] = field(default_factory=list)
    taus: list[float] = field(default_factory=list)
    curvatures: list[float] = field(default_factory=list)
    betas: list[float] = field(default_factory=list)


@dataclass
class SolverState:
    """State after ``t`` completed iterations.

    ``eta_cur``/``tau_cur`` are the parameters of the next iteration
    (eta_{t+1}, tau_{t+1}); ``eta_prev``/``tau_prev`` those of iteration t.
    ``g_prev``/``f_prev`` hold the oracle answer at ``x``.
    """

    policy: PolicyKind
    beta: float
    z: np.ndarray
    y: np.ndarray
    x: np.ndarray
    g_prev: np.ndarray
    f_prev: float
    eta_cur: float
    eta_first: float
    hatL: float
    avg_num: np.ndarray
    t: int = 0
    eta_prev: float = 0.0
    tau_cur: float = 0.0
    tau_prev: float = 0.0
    tau_prevprev: float = 0.0
    L_last: float = 0.0
    L_first: float = 0.0
    avg_den: float = 0.0
    oracle_calls: int = 0
    init_calls: int = 0
    # ||z_1 - z_0||^2, set by iteration 1
    first_step_sq: float = 0.0
    eta_second: float = 0.0
    # running sums for the certificates
    lower_sum_simple: float = 0.0
    lower_sum_adaptive: float = 0.0
    stationary: bool = False
    history: Optional[ScheduleHistory] = None
    pending: Optional[InitResult] = None

    @property
    def iteration(self) -> int:
        return self.t


def acfgm_start(problem: CompositeProblem, x0, config: SolverConfig) -> SolverState:
    """Evaluate the initial stepsize and build the iteration-0 state."""
    z0 = np.array(x0, dtype=np.float64)
    if z0.shape != (problem.dimension,):
        raise InvalidInputError(f"x0 has shape {z0.shape}, expected ({problem.dimension},)")
    init = initial_stepsize(config.init, problem, z0, config.policy, config.beta, config.max_trials)
    history = ScheduleHistory(etas=[init.eta1], taus=[0.0]) if config.record_history else None
    log.debug("start %s: eta1=%.6g init_calls=%d", problem.name, init.eta1, init.calls)
    return SolverState(
        policy=config.policy,
        beta=config.beta,
        z=z0,
        y=z0.copy(),
        x=z0.copy(),
        g_prev=init.g0,
        f_prev=init.f0,
        eta_cur=init.eta1,
        eta_first=init.eta1,
        hatL=1.0 / (4.0 * (1.0 - config.beta) * init.eta1),
        avg_num=np.zeros_like(z0),
        oracle_calls=init.calls,
        init_calls=init.calls,
        history=history,
        pending=init if init.z1 is not None else None,
    )


def _next_parameters(state: SolverState, t: int, L: float) -> tuple[float, float]:
    """(eta_{t+1}, tau_{t+1}) from the parameters of iteration t."""
    alpha = schedule_alpha(state.policy)
    if alpha is None:
        return stepsize_simple(t + 1, state.eta_cur, L, state.beta)
    return stepsize_adaptive(t + 1, alpha, state.eta_cur, state.tau_cur, state.tau_prev, L, state.beta)


def acfgm_iterate(state: SolverState, problem: CompositeProblem, policy: Optional[PolicyKind] = None) -> SolverState:
    """Advance ``state`` by one iteration in place and return it."""
    if policy is not None and policy != state.policy:
        raise InvalidInputError("policy differs from the one the state was started with")
    t = state.t + 1
    eta, tau = state.eta_cur, state.tau_cur
    beta_t = 0.0 if t == 1 else state.beta
    epsilon = policy_epsilon(state.policy)

    pending = state.pending if t == 1 else None
    if pending is not None:
        z = pending.z1
    else:
        z = prox_step(problem.prox_term, state.y, state.g_prev, eta)
    y = (1.0 - beta_t) * state.y + beta_t * z
    x = (z + tau * state.x) / (1.0 + tau)

    if pending is not None:
        f, g = pending.f1, pending.g1
        state.pending = None
    else:
        f, g = problem.oracle(x)
    state.oracle_calls += 1
    if not is_finite_pair(f, g):
        raise DivergedError(f"non-finite oracle output at iteration {t}", iteration=t)

    if t == 1:
        state.first_step_sq = float(np.dot(z - state.z, z - state.z))
        if np.array_equal(x, state.x):
            log.info("first step did not move; x0 is optimal")
            state.stationary = True
            L = 0.0
        elif epsilon is None:
            L = curvature_first(state.x, x, state.g_prev, g)
        else:
            L = curvature_hoelder(1, epsilon, tau, state.f_prev, f, state.g_prev, g, state.x, x)
        state.L_first = L
    elif epsilon is None:
        L = curvature_smooth(state.f_prev, f, state.g_prev, g, state.x, x)
    else:
        L = curvature_hoelder(t, epsilon, tau, state.f_prev, f, state.g_prev, g, state.x, x)
    hatL = max(state.hatL, L)

    eta_next, tau_next = _next_parameters(state, t, L)
    if t == 1:
        state.eta_second = eta_next

    if t >= 2:
        # x_{t-1} leaves the tail of the average with its final weight
        weight = (state.tau_prev + 1.0) * eta - tau * eta_next
        state.avg_num = state.avg_num + weight * state.x
    state.avg_den += eta_next

    alpha = schedule_alpha(state.policy)
    alpha = 1.0 if alpha is None else alpha
    state.lower_sum_simple += (t + 1) / (6.0 * hatL)
    state.lower_sum_adaptive += (3.0 + alpha * (t - 2)) / hatL

    if state.history is not None:
        state.history.curvatures.append(L)
        state.history.betas.append(beta_t)
        state.history.etas.append(eta_next)
        state.history.taus.append(tau_next)

    state.t = t
    state.z, state.y, state.x = z, y, x
    state.f_prev, state.g_prev = f, g
    state.L_last, state.hatL = L, hatL
    state.eta_prev, state.eta_cur = eta, eta_next
    state.tau_prevprev, state.tau_prev, state.tau_cur = state.tau_prev, tau, tau_next
    if log.isEnabledFor(logging.DEBUG):
        log.debug("t=%d f=%.10g L=%.6g eta_next=%.6g tau_next=%.6g", t, f, L, eta_next, tau_next)
    return state


def averaged_iterate(state: SolverState) -> np.ndarray:
    if state.t == 0:
        raise InvalidStateError("the averaged iterate needs at least one iteration")
    tail = (state.tau_prev + 1.0) * state.eta_cur
    return (state.avg_num + tail * state.x) / state.avg_den


def solution(state: SolverState) -> np.ndarray:
    """The iterate carrying the guarantee: averaged in Hoelder mode, else the last."""
    if isinstance(state.policy, Hoelder):
        return averaged_iterate(state)
    return state.x


def acfgm_solve(
    problem: CompositeProblem,
    x0,
    config: SolverConfig,
    reference: Optional[float] = None,
) -> SolverState:
    """Run until ``config.max_iter`` or until the gap to ``reference`` drops below ``config.gap_tol``."""
    state = acfgm_start(problem, x0, config)
    while state.t < config.max_iter and not state.stationary:
        acfgm_iterate(state, problem)
        if config.gap_tol is not None and reference is not None:
            gap = problem.objective(solution(state)) - reference
            if math.isfinite(gap) and gap <= config.gap_tol:
                log.info("gap %.3g reached at iteration %d", gap, state.t)
                break
    return state
