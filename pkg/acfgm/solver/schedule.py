"""Check a recorded parameter history against the convergence conditions."""

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from acfgm.solver.policy import BETA_MAX

# relative slack for products that coincide with a limit in exact arithmetic
RTOL = 1e-12


@dataclass(frozen=True)
class Violation:
    iteration: int
    condition: str
    value: float
    limit: float

    def __str__(self) -> str:
        return f"t={self.iteration}: {self.condition} ({self.value!r} > {self.limit!r})"


def _over(numerator: float, curvature: float) -> float:
    return numerator / curvature if curvature > 0 else math.inf


def validate_schedule(
    etas: Sequence[float],
    taus: Sequence[float],
    curvatures: Sequence[float],
    beta: float,
    betas: Optional[Sequence[float]] = None,
) -> list[Violation]:
    """Return every violated condition; empty for a conforming run.

    ``etas[i]`` and ``taus[i]`` are the parameters of iteration i + 1,
    ``curvatures[i]`` is L_{i+1} (the regularized estimate in Hoelder mode),
    ``betas[i]`` the averaging weight used by iteration i + 1.
    """
    found: list[Violation] = []

    def check(t: int, condition: str, value: float, limit: float) -> None:
        if value > limit * (1.0 + RTOL):
            found.append(Violation(t, condition, value, limit))

    if not 0.0 < beta <= BETA_MAX * (1.0 + RTOL):
        found.append(Violation(0, "beta in (0, 1 - sqrt(6)/3]", beta, BETA_MAX))
    if taus and taus[0] != 0.0:
        found.append(Violation(1, "tau_1 = 0", taus[0], 0.0))
    if betas is not None:
        for t, b in enumerate(betas, start=1):
            expected = 0.0 if t == 1 else beta
            if b != expected:
                found.append(Violation(t, f"beta_{t} = {expected!r}", b, expected))

    # 0-based: etas[i] is eta_{i+1}
    if len(etas) >= 2 and curvatures:
        check(2, "eta_2 <= (1 - beta) eta_1", etas[1], (1.0 - beta) * etas[0])
        check(2, "eta_2 <= 1 / (4 L_1)", etas[1], _over(1.0, 4.0 * curvatures[0]))

    for i in range(2, min(len(etas), len(taus), len(curvatures) + 1)):
        t = i + 1
        check(t, "eta_t <= 2 (1 - beta)^2 eta_{t-1}", etas[i], 2.0 * (1.0 - beta) ** 2 * etas[i - 1])
        check(t, "eta_t <= tau_{t-1} / (4 L_{t-1})", etas[i], _over(taus[i - 1], 4.0 * curvatures[i - 1]))
        check(
            t,
            "eta_t <= (tau_{t-2} + 1) / tau_{t-1} eta_{t-1}",
            etas[i],
            _over(taus[i - 2] + 1.0, taus[i - 1]) * etas[i - 1],
        )
    return found
