"""Penalty parameters computed from the data."""

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import ndtr

from acfgm.core.linalg import matvec_t
from acfgm.errors import ConfigError, InvalidInputError
from acfgm.problems.dataset import Dataset

PENALTY_FAMILIES = ("lasso_frac", "sqrt_lasso_quantile", "logistic_frac")

# rational approximation of the standard normal quantile, |rel err| < 1.2e-9
_A = (-3.969683028665376e01, 2.209460984245205e02, -2.759285104469687e02,
      1.383577518672690e02, -3.066479806614716e01, 2.506628277459239e00)
_B = (-5.447609879822406e01, 1.615858368580409e02, -1.556989798598866e02,
      6.680131188771972e01, -1.328068155288572e01)
_C = (-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e00,
      -2.549732539343734e00, 4.374664141464968e00, 2.938163982698783e00)
_D = (7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e00,
      3.754408661907416e00)
_P_LOW = 0.02425
_INV_SQRT_2PI = 1.0 / math.sqrt(2.0 * math.pi)


def _lower_quantile(p: float) -> float:
    """Quantile for 0 < p <= 0.5."""
    if p < _P_LOW:
        q = math.sqrt(-2.0 * math.log(p))
        num = ((((_C[0] * q + _C[1]) * q + _C[2]) * q + _C[3]) * q + _C[4]) * q + _C[5]
        den = (((_D[0] * q + _D[1]) * q + _D[2]) * q + _D[3]) * q + 1.0
        x = num / den
    else:
        q = p - 0.5
        r = q * q
        num = (((((_A[0] * r + _A[1]) * r + _A[2]) * r + _A[3]) * r + _A[4]) * r + _A[5]) * q
        den = ((((_B[0] * r + _B[1]) * r + _B[2]) * r + _B[3]) * r + _B[4]) * r + 1.0
        x = num / den
    # one Newton step against the erf-based CDF
    density = _INV_SQRT_2PI * math.exp(-0.5 * x * x)
    return x - (float(ndtr(x)) - p) / density


def norm_ppf(p: float) -> float:
    """Inverse of the standard normal CDF."""
    if not 0.0 < p < 1.0:
        raise InvalidInputError(f"probability must lie in (0, 1), got {p}")
    if p > 0.5:
        # 1 - p is exact on [0.5, 1)
        return -_lower_quantile(1.0 - p)
    return _lower_quantile(p)


@dataclass(frozen=True)
class PenaltySpec:
    """``family`` is one of PENALTY_FAMILIES; ``c`` scales the data-driven value."""

    family: str
    c: float

    def __post_init__(self):
        if self.family not in PENALTY_FAMILIES:
            raise ConfigError(f"Unknown penalty family '{self.family}'. Available: {', '.join(PENALTY_FAMILIES)}")
        if not (self.c > 0 and math.isfinite(self.c)):
            raise ConfigError(f"penalty constant must be > 0, got {self.c}")


def resolve_penalty(spec: PenaltySpec, data: Dataset) -> float:
    m, n = data.m, data.n
    if n == 0:
        raise ConfigError(f"{data.name}: no features, penalty undefined")
    if m == 0:
        raise ConfigError(f"{data.name}: no samples, penalty undefined")
    if spec.family == "sqrt_lasso_quantile":
        return spec.c / math.sqrt(m) * norm_ppf(1.0 - 0.01 / n)
    correlation = float(np.max(np.abs(matvec_t(data.A, data.b))))
    if spec.family == "lasso_frac":
        return spec.c / m * correlation
    return spec.c * correlation
