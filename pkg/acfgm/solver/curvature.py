"""Local curvature estimates between consecutive search points.

Conventions: 0/0 = 0 and a/0 = +inf for a > 0.
"""

import math

import numpy as np

from acfgm.errors import InvalidInputError, InvalidStateError


def _sq(v: np.ndarray) -> float:
    return float(np.dot(v, v))


def _pair(a: np.ndarray, b: np.ndarray) -> None:
    if a.shape != b.shape:
        raise InvalidInputError(f"shape mismatch {a.shape} vs {b.shape}")


def bracket(f_prev: float, f_cur: float, g_cur: np.ndarray, x_prev: np.ndarray, x_cur: np.ndarray) -> float:
    """f_prev - f_cur - <g_cur, x_prev - x_cur>, clamped at 0."""
    b = f_prev - f_cur - float(np.dot(g_cur, x_prev - x_cur))
    return b if b > 0 else 0.0


def curvature_first(x0: np.ndarray, x1: np.ndarray, g0: np.ndarray, g1: np.ndarray) -> float:
    _pair(x0, x1)
    _pair(g0, g1)
    dx = math.sqrt(_sq(x1 - x0))
    if dx == 0:
        raise InvalidStateError("x1 equals x0; the first step did not move")
    return math.sqrt(_sq(g1 - g0)) / dx


def curvature_smooth(
    f_prev: float,
    f_cur: float,
    g_prev: np.ndarray,
    g_cur: np.ndarray,
    x_prev: np.ndarray,
    x_cur: np.ndarray,
) -> float:
    _pair(g_prev, g_cur)
    _pair(x_prev, x_cur)
    b = bracket(f_prev, f_cur, g_cur, x_prev, x_cur)
    if b == 0:
        return 0.0
    return _sq(g_cur - g_prev) / (2.0 * b)


def curvature_hoelder_first(x0: np.ndarray, x1: np.ndarray, g0: np.ndarray, g1: np.ndarray, epsilon: float) -> float:
    _pair(x0, x1)
    _pair(g0, g1)
    dx2 = _sq(x1 - x0)
    if dx2 == 0:
        raise InvalidStateError("x1 equals x0; the first step did not move")
    quarter = epsilon / 4.0
    return (math.sqrt(dx2 * _sq(g1 - g0) + quarter * quarter) - quarter) / dx2


def curvature_hoelder(
    t: int,
    epsilon: float,
    tau: float,
    f_prev: float,
    f_cur: float,
    g_prev: np.ndarray,
    g_cur: np.ndarray,
    x_prev: np.ndarray,
    x_cur: np.ndarray,
) -> float:
    """Regularized curvature; for t = 1 the f values and tau are unused."""
    if not epsilon > 0:
        raise InvalidInputError(f"epsilon must be > 0, got {epsilon}")
    if t == 1:
        return curvature_hoelder_first(x_prev, x_cur, g_prev, g_cur, epsilon)
    if not tau > 0:
        raise InvalidInputError(f"tau must be > 0 for t >= 2, got {tau}")
    _pair(g_prev, g_cur)
    _pair(x_prev, x_cur)
    num = _sq(g_cur - g_prev)
    if num == 0:
        return 0.0
    return num / (2.0 * bracket(f_prev, f_cur, g_cur, x_prev, x_cur) + epsilon / tau)
