"""Stepsize policies, initial-stepsize strategies and solver settings."""

import math
from dataclasses import dataclass, field
from typing import Optional, Union

import numpy as np

from acfgm.errors import ConfigError

# largest beta for which the schedule conditions can hold
BETA_MAX = 1.0 - math.sqrt(6.0) / 3.0
DEFAULT_BETA = BETA_MAX


@dataclass(frozen=True)
class Simple:
    """tau_t = t/2 with the matching stepsize growth."""

    name = "simple"


@dataclass(frozen=True)
class Adaptive:
    """Adaptive tau_t; alpha = 1 reduces to Simple."""

    alpha: float = 0.0
    name = "adaptive"

    def __post_init__(self):
        if not 0.0 <= self.alpha <= 1.0:
            raise ConfigError(f"alpha must lie in [0, 1], got {self.alpha}")


@dataclass(frozen=True)
class Hoelder:
    """Universal mode: epsilon-regularized curvature estimates.

    With ``alpha`` unset the Simple schedule is used, otherwise the
    Adaptive one with that alpha.
    """

    epsilon: float
    alpha: Optional[float] = None
    name = "hoelder"

    def __post_init__(self):
        if not self.epsilon > 0:
            raise ConfigError(f"epsilon must be > 0, got {self.epsilon}")
        if self.alpha is not None and not 0.0 <= self.alpha <= 1.0:
            raise ConfigError(f"alpha must lie in [0, 1], got {self.alpha}")


PolicyKind = Union[Simple, Adaptive, Hoelder]


def schedule_alpha(policy: PolicyKind) -> Optional[float]:
    """alpha driving the adaptive schedule, or None for the simple one."""
    if isinstance(policy, Adaptive):
        return policy.alpha
    if isinstance(policy, Hoelder):
        return policy.alpha
    return None


def policy_epsilon(policy: PolicyKind) -> Optional[float]:
    return policy.epsilon if isinstance(policy, Hoelder) else None


@dataclass(frozen=True)
class FromL0:
    """eta_1 = scale / L0 with L0 the secant curvature between z0 and a probe."""

    probe: Optional[np.ndarray] = None
    scale: float = 0.4
    floor: float = 1e-12

    def __post_init__(self):
        if not self.scale > 0:
            raise ConfigError(f"scale must be > 0, got {self.scale}")
        if not self.floor > 0:
            raise ConfigError(f"floor must be > 0, got {self.floor}")


@dataclass(frozen=True)
class FirstIterLineSearch:
    """Backtrack on eta_1 until the first step certifies itself."""

    probe: Optional[np.ndarray] = None
    gamma: float = 2.0
    boost: float = 1.0
    floor: float = 1e-12

    def __post_init__(self):
        if not self.gamma > 1:
            raise ConfigError(f"gamma must be > 1, got {self.gamma}")
        if not self.boost > 0:
            raise ConfigError(f"boost must be > 0, got {self.boost}")


@dataclass(frozen=True)
class Explicit:
    eta1: float

    def __post_init__(self):
        if not (self.eta1 > 0 and math.isfinite(self.eta1)):
            raise ConfigError(f"eta1 must be a positive finite number, got {self.eta1}")


InitStrategy = Union[FromL0, FirstIterLineSearch, Explicit]


@dataclass(frozen=True)
class SolverConfig:
    policy: PolicyKind = field(default_factory=Simple)
    beta: float = DEFAULT_BETA
    init: InitStrategy = field(default_factory=FromL0)
    max_trials: int = 60
    max_iter: int = 1000
    gap_tol: Optional[float] = None
    record_history: bool = False

    def __post_init__(self):
        # exact upper endpoint is allowed; tiny slack for users typing the decimal value
        if not 0.0 < self.beta <= BETA_MAX * (1 + 1e-12):
            raise ConfigError(f"beta must lie in (0, {BETA_MAX:.6f}], got {self.beta}")
        if self.max_trials < 1:
            raise ConfigError("max_trials must be >= 1")
        if self.max_iter < 1:
            raise ConfigError("max_iter must be >= 1")
