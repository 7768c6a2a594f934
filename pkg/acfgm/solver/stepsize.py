"""Stepsize schedules.

Both rules return (eta_t, tau_t) for t >= 2 and read only quantities from
the previous one or two iterations. Division by a zero curvature yields
+inf so the other branches bind.
"""

import math

from acfgm.errors import ConfigError, InvalidInputError
from acfgm.solver.policy import BETA_MAX


# largest stepsize any schedule hands out; reached only while no curvature has been seen
MAX_STEPSIZE = 1e100


def _over(numerator: float, curvature: float) -> float:
    return numerator / curvature if curvature > 0 else math.inf


def _check(t: int, beta: float) -> None:
    if t < 2:
        raise InvalidInputError(f"schedules start at t = 2, got {t}")
    if not 0.0 < beta <= BETA_MAX * (1 + 1e-12):
        raise ConfigError(f"beta must lie in (0, {BETA_MAX:.6f}], got {beta}")


def second_stepsize(eta1: float, L1: float, beta: float) -> float:
    return min((1.0 - beta) * eta1, _over(1.0, 4.0 * L1))


def stepsize_simple(t: int, eta_prev: float, L_prev: float, beta: float) -> tuple[float, float]:
    """eta_prev is eta_{t-1} (eta_1 when t = 2), L_prev is L_{t-1}."""
    _check(t, beta)
    tau = t / 2.0
    if t == 2:
        return second_stepsize(eta_prev, L_prev, beta), tau
    if t == 3:
        return min(eta_prev, _over(1.0, 4.0 * L_prev)), tau
    return min(t / (t - 1) * eta_prev, _over(t - 1, 8.0 * L_prev), MAX_STEPSIZE), tau


def stepsize_adaptive(
    t: int,
    alpha: float,
    eta_prev: float,
    tau_prev: float,
    tau_prevprev: float,
    L_prev: float,
    beta: float,
) -> tuple[float, float]:
    """tau_prev is tau_{t-1}, tau_prevprev is tau_{t-2}."""
    _check(t, beta)
    if not 0.0 <= alpha <= 1.0:
        raise ConfigError(f"alpha must lie in [0, 1], got {alpha}")
    if t == 2:
        return second_stepsize(eta_prev, L_prev, beta), 1.0
    eta = min(
        4.0 / 3.0 * eta_prev,
        (tau_prevprev + 1.0) / tau_prev * eta_prev,
        _over(tau_prev, 4.0 * L_prev),
        MAX_STEPSIZE,
    )
    tau = tau_prev + alpha / 2.0
    if L_prev > 0 and alpha < 1.0:
        tau += 2.0 * (1.0 - alpha) * eta * L_prev / tau_prev
    return eta, tau
