"""Oracle helpers shared by the baselines."""

import numpy as np

from acfgm.core.problem import CompositeProblem, is_finite_pair
from acfgm.errors import DivergedError, InvalidInputError


def evaluate(problem: CompositeProblem, x: np.ndarray, iteration: int) -> tuple[float, np.ndarray]:
    f, g = problem.oracle(x)
    if not is_finite_pair(f, g):
        raise DivergedError(f"non-finite oracle output at iteration {iteration}", iteration=iteration)
    return f, g


def start_point(problem: CompositeProblem, x0) -> np.ndarray:
    x = np.array(x0, dtype=np.float64)
    if x.shape != (problem.dimension,):
        raise InvalidInputError(f"x0 has shape {x.shape}, expected ({problem.dimension},)")
    return x
