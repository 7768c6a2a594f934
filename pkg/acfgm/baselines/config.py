"""Settings shared by the baseline solvers."""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from acfgm.errors import ConfigError

METHODS = ("adgd", "nsfgm", "nspgm", "nsagd")
DEFAULT_GAMMA = {"adgd": 1.5, "nsfgm": 2.0, "nspgm": 2.0, "nsagd": 2.0}


@dataclass(frozen=True)
class BaselineConfig:
    """``gamma`` defaults per method; ``lipschitz`` is NS-AGD's global constant."""

    method: str
    gamma: Optional[float] = None
    epsilon: float = 1e-10
    lipschitz: Optional[float] = None
    max_trials: int = 60
    accelerated: bool = True
    max_iter: int = 1000

    def __post_init__(self):
        if self.method not in METHODS:
            raise ConfigError(f"Unknown baseline '{self.method}'. Available: {', '.join(METHODS)}")
        if self.gamma is None:
            object.__setattr__(self, "gamma", DEFAULT_GAMMA[self.method])
        if not self.gamma > 1:
            raise ConfigError(f"gamma must be > 1, got {self.gamma}")
        if not self.epsilon >= 0:
            raise ConfigError(f"epsilon must be >= 0, got {self.epsilon}")
        if self.lipschitz is not None and not (self.lipschitz > 0 and math.isfinite(self.lipschitz)):
            raise ConfigError(f"lipschitz must be a positive finite number, got {self.lipschitz}")
        if self.max_trials < 1:
            raise ConfigError("max_trials must be >= 1")


def roundoff_slack(*values: float) -> float:
    """Absolute tolerance for comparing objective values of similar size."""
    return 4.0 * np.finfo(np.float64).eps * max(1.0, *(abs(v) for v in values))
