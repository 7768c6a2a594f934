"""The composite problem abstraction Psi(x) = f(x) + h(x)."""

import dataclasses
import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from acfgm.core.prox import ProxTerm
from acfgm.errors import InvalidInputError

SmoothOracle = Callable[[np.ndarray], tuple[float, np.ndarray]]


@dataclass(frozen=True)
class CompositeProblem:
    """First-order oracle for f paired with a prox-friendly h.

    Solvers reach f only through ``oracle``; every call there is an oracle
    call in the benchmark's accounting. ``value`` is the reporting path used
    for traces and is never counted. ``lipschitz_bound`` lazily returns a
    global smoothness constant when the family knows one.
    """

    smooth_oracle: SmoothOracle
    prox_term: ProxTerm
    dimension: int
    name: str = "problem"
    smooth_value: Optional[Callable[[np.ndarray], float]] = None
    lipschitz_bound: Optional[Callable[[], float]] = None

    def __post_init__(self):
        if self.dimension < 1:
            raise InvalidInputError(f"dimension must be >= 1, got {self.dimension}")

    def oracle(self, x: np.ndarray) -> tuple[float, np.ndarray]:
        value, grad = self.smooth_oracle(x)
        grad = np.asarray(grad, dtype=np.float64)
        if grad.shape != (self.dimension,):
            raise InvalidInputError(f"oracle returned gradient of shape {grad.shape}, expected ({self.dimension},)")
        return float(value), grad

    def value(self, x: np.ndarray) -> float:
        if self.smooth_value is not None:
            return float(self.smooth_value(x))
        return float(self.smooth_oracle(x)[0])

    def objective(self, x: np.ndarray) -> float:
        return self.value(x) + self.prox_term(x)

    def with_oracle(self, oracle: SmoothOracle) -> "CompositeProblem":
        """Copy of this problem whose counted path goes through ``oracle``."""
        value_path = self.smooth_value
        if value_path is None:
            original = self.smooth_oracle

            def value_path(x):
                return original(x)[0]

        return dataclasses.replace(self, smooth_oracle=oracle, smooth_value=value_path)


def is_finite_pair(value: float, grad: np.ndarray) -> bool:
    return math.isfinite(value) and bool(np.all(np.isfinite(grad)))
