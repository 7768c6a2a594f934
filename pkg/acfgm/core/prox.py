"""Prox-friendly terms h and their closed-form prox steps."""

import enum
import math
from dataclasses import dataclass

import numpy as np

from acfgm.core.linalg import check_length
from acfgm.errors import InvalidInputError

# relative slack when testing membership of a projected point
_BALL_SLACK = 1e-12


class ProxKind(enum.Enum):
    ZERO = "zero"
    L1 = "l1"
    BALL = "ball"


@dataclass(frozen=True)
class ProxTerm:
    """A prox-friendly convex term.

    ``weight`` is the l1 penalty lambda for ``L1``; ``radius`` bounds the
    feasible ball for ``BALL``. Calling the term evaluates h(x); outside the
    ball the indicator is ``math.inf``.
    """

    kind: ProxKind = ProxKind.ZERO
    weight: float = 0.0
    radius: float = math.inf

    def __post_init__(self):
        if not self.weight >= 0:
            raise InvalidInputError(f"l1 weight must be >= 0, got {self.weight}")
        if not self.radius > 0:
            raise InvalidInputError(f"ball radius must be > 0, got {self.radius}")
        if self.kind is ProxKind.BALL and not math.isfinite(self.radius):
            raise InvalidInputError("ball radius must be finite")

    @classmethod
    def zero(cls) -> "ProxTerm":
        return cls(ProxKind.ZERO)

    @classmethod
    def l1(cls, weight: float) -> "ProxTerm":
        return cls(ProxKind.L1, weight=float(weight))

    @classmethod
    def ball(cls, radius: float) -> "ProxTerm":
        return cls(ProxKind.BALL, radius=float(radius))

    def __call__(self, x: np.ndarray) -> float:
        if self.kind is ProxKind.L1:
            return self.weight * float(np.sum(np.abs(x)))
        if self.kind is ProxKind.BALL:
            return 0.0 if float(np.linalg.norm(x)) <= self.radius * (1 + _BALL_SLACK) else math.inf
        return 0.0

    def describe(self) -> str:
        if self.kind is ProxKind.L1:
            return f"l1({self.weight!r})"
        if self.kind is ProxKind.BALL:
            return f"ball({self.radius!r})"
        return "zero"


def prox_step(term: ProxTerm, center: np.ndarray, slope: np.ndarray, stepsize: float) -> np.ndarray:
    """Solve argmin_z eta * (<slope, z> + h(z)) + 0.5 * ||center - z||^2."""
    if not stepsize > 0:
        raise InvalidInputError(f"stepsize must be > 0, got {stepsize}")
    if not math.isfinite(stepsize):
        raise InvalidInputError("stepsize must be finite")
    n = center.shape[0]
    check_length(center, n, "center")
    check_length(slope, n, "slope")

    v = center - stepsize * slope
    if term.kind is ProxKind.L1:
        threshold = stepsize * term.weight
        mag = np.abs(v)
        return np.where(mag > threshold, v - threshold * np.sign(v), 0.0)
    if term.kind is ProxKind.BALL:
        norm = float(np.linalg.norm(v))
        if norm > term.radius:
            return v * (term.radius / norm)
    return v
