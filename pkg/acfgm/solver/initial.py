"""Initial stepsize selection.

Every strategy evaluates the oracle at z0 once. ``FromL0`` adds one call per
probe; ``FirstIterLineSearch`` adds one per trial and hands the accepted
first step back so iteration 1 does not repeat it.
"""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from acfgm.core.problem import CompositeProblem, is_finite_pair
from acfgm.core.prox import prox_step
from acfgm.errors import DivergedError, InvalidInputError
from acfgm.solver.curvature import curvature_first, curvature_hoelder_first
from acfgm.solver.policy import (
    DEFAULT_BETA,
    Explicit,
    FirstIterLineSearch,
    FromL0,
    InitStrategy,
    PolicyKind,
    policy_epsilon,
)

log = logging.getLogger(__name__)

PROBE_RELATIVE = 1e-2
PROBE_RETRIES = 3


@dataclass
class InitResult:
    eta1: float
    f0: float
    g0: np.ndarray
    calls: int
    L0: Optional[float] = None
    # accepted first step of the line search, reused by iteration 1
    z1: Optional[np.ndarray] = None
    f1: Optional[float] = None
    g1: Optional[np.ndarray] = None
    L1: Optional[float] = None
    trials: int = 0


def _secant(x0, x1, g0, g1, epsilon: Optional[float]) -> float:
    if epsilon is None:
        return curvature_first(x0, x1, g0, g1)
    return curvature_hoelder_first(x0, x1, g0, g1, epsilon)


def _evaluate(problem: CompositeProblem, x: np.ndarray, what: str) -> tuple[float, np.ndarray]:
    f, g = problem.oracle(x)
    if not is_finite_pair(f, g):
        raise DivergedError(f"non-finite oracle output at {what}", iteration=0)
    return f, g


def default_probe(z0: np.ndarray, scale: float = 1.0) -> np.ndarray:
    probe = np.array(z0, dtype=np.float64)
    probe[0] += scale * PROBE_RELATIVE * max(float(np.linalg.norm(z0)), 1.0)
    return probe


def probe_curvature(
    problem: CompositeProblem,
    z0: np.ndarray,
    g0: np.ndarray,
    probe: Optional[np.ndarray],
    epsilon: Optional[float],
    floor: float,
) -> tuple[float, int]:
    """Return (L0, oracle calls used)."""
    calls = 0
    if probe is not None:
        probe = np.asarray(probe, dtype=np.float64)
        if probe.shape != z0.shape:
            raise InvalidInputError(f"probe has shape {probe.shape}, expected {z0.shape}")
        if np.array_equal(probe, z0):
            raise InvalidInputError("probe must differ from z0")
        candidates = [probe] + [z0 + 10.0 ** (k + 1) * (probe - z0) for k in range(PROBE_RETRIES)]
    else:
        candidates = [default_probe(z0, 10.0**k) for k in range(PROBE_RETRIES + 1)]

    for candidate in candidates:
        _, g_probe = _evaluate(problem, candidate, "the initial probe")
        calls += 1
        L0 = _secant(z0, candidate, g0, g_probe, epsilon)
        if L0 > 0:
            return L0, calls
        log.debug("flat probe at distance %.3g, widening", float(np.linalg.norm(candidate - z0)))
    log.info("no curvature detected by the probe, using floor %g", floor)
    return floor, calls


def initial_stepsize(
    strategy: InitStrategy,
    problem: CompositeProblem,
    z0: np.ndarray,
    policy: PolicyKind,
    beta: float = DEFAULT_BETA,
    max_trials: int = 60,
) -> InitResult:
    f0, g0 = _evaluate(problem, z0, "z0")
    epsilon = policy_epsilon(policy)

    if isinstance(strategy, Explicit):
        return InitResult(eta1=strategy.eta1, f0=f0, g0=g0, calls=1)

    if isinstance(strategy, FromL0):
        L0, used = probe_curvature(problem, z0, g0, strategy.probe, epsilon, strategy.floor)
        eta1 = strategy.scale / L0
        log.debug("L0=%.6g eta1=%.6g", L0, eta1)
        return InitResult(eta1=eta1, f0=f0, g0=g0, calls=1 + used, L0=L0)

    if isinstance(strategy, FirstIterLineSearch):
        L0, used = probe_curvature(problem, z0, g0, strategy.probe, epsilon, strategy.floor)
        calls = 1 + used
        for i in range(max_trials):
            eta = strategy.boost / (4.0 * (1.0 - beta) * L0 * strategy.gamma**i)
            z1 = prox_step(problem.prox_term, z0, g0, eta)
            f1, g1 = _evaluate(problem, z1, f"line-search trial {i}")
            if np.array_equal(z1, z0):
                L1 = 0.0
            else:
                L1 = _secant(z0, z1, g0, g1, epsilon)
            if L1 == 0 or eta <= 2.0 / (5.0 * L1):
                log.debug("first step accepted after %d trial(s): eta1=%.6g L1=%.6g", i + 1, eta, L1)
                # the accepted trial's call is booked to iteration 1
                return InitResult(
                    eta1=eta, f0=f0, g0=g0, calls=calls + i, L0=L0, z1=z1, f1=f1, g1=g1, L1=L1, trials=i + 1
                )
        raise DivergedError(f"first-iteration line search exceeded {max_trials} trials", iteration=1, trials=max_trials)

    raise InvalidInputError(f"unknown init strategy {strategy!r}")


