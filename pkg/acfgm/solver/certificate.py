"""Closed-form optimality-gap bounds evaluated with realized run quantities."""

import math
from dataclasses import dataclass
from typing import Optional

from acfgm.errors import InvalidInputError, InvalidStateError
from acfgm.solver.acfgm import SolverState
from acfgm.solver.policy import Adaptive, Hoelder


@dataclass(frozen=True)
class Certificate:
    """Upper bounds on Psi(x_k) - Psi* and Psi(bar x_k) - Psi*.

    A bound is None when the policy carries no guarantee for that iterate.
    ``realized_*`` use the actual stepsizes instead of their lower bounds.
    """

    bound_last_iterate: Optional[float]
    bound_avg_iterate: Optional[float]
    realized_last_iterate: Optional[float]
    realized_avg_iterate: Optional[float]
    k: int
    hatL: float
    beta: float
    eta1: float
    eta2: float
    L1: float
    distance_sq: float
    first_step_sq: float
    epsilon: float = 0.0


def _bracket(distance_sq: float, beta: float, eta1: float, eta2: float, L1: float, first_step_sq: float) -> float:
    """D/(2 beta) + [5 eta2 L1/4 - eta2/(2 eta1)]_+ ||z1 - z0||^2."""
    excess = max(0.0, 1.25 * eta2 * L1 - eta2 / (2.0 * eta1))
    return distance_sq / (2.0 * beta) + excess * first_step_sq


def certificate(state: SolverState, distance_sq: float) -> Certificate:
    """Bounds after ``state.t`` iterations given ||z0 - x*||^2 (or a surrogate).

    The averaged-iterate bounds of the smooth policies divide by the running sum of
    per-iteration stepsize lower bounds, each taken with the hatL reached at that
    iteration. hatL is nondecreasing, so this sum is at least the closed form with
    the final hatL and the reported bound is never looser than it.
    """
    if state.t == 0:
        raise InvalidStateError("certificate needs at least one iteration")
    if not distance_sq >= 0:
        raise InvalidInputError(f"distance_sq must be >= 0, got {distance_sq}")
    k = state.t
    policy = state.policy
    bracket = _bracket(distance_sq, state.beta, state.eta_first, state.eta_second, state.L_first, state.first_step_sq)
    doubled = 2.0 * bracket
    common = dict(
        k=k,
        hatL=state.hatL,
        beta=state.beta,
        eta1=state.eta_first,
        eta2=state.eta_second,
        L1=state.L_first,
        distance_sq=distance_sq,
        first_step_sq=state.first_step_sq,
    )

    if isinstance(policy, Hoelder):
        epsilon = policy.epsilon
        if policy.alpha == 0.0:
            return Certificate(None, None, None, None, epsilon=epsilon, **common)
        avg = bracket / state.avg_den + epsilon / 2.0
        return Certificate(None, avg, None, avg, epsilon=epsilon, **common)

    realized_last = bracket / ((state.tau_prev + 1.0) * state.eta_cur)
    realized_avg = bracket / state.avg_den
    if isinstance(policy, Adaptive):
        a = policy.alpha
        last = 12.0 * state.hatL * doubled / ((a * k + 4.0 - 2.0 * a) * (a * k + 3.0 - 2.0 * a))
        avg = 6.0 * doubled / state.lower_sum_adaptive
    else:
        last = 12.0 * state.hatL * doubled / (k * (k + 1))
        avg = doubled / state.lower_sum_simple
    for value in (last, avg):
        if not math.isfinite(value):
            raise InvalidStateError("certificate evaluated to a non-finite value")
    return Certificate(last, avg, realized_last, realized_avg, **common)
