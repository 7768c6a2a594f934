"""Problem families known to the harness."""

from dataclasses import dataclass
from typing import Callable, Optional

from acfgm.core.problem import CompositeProblem
from acfgm.errors import ConfigError
from acfgm.problems.dataset import Dataset
from acfgm.problems.generate import random_logistic_instance, random_qp_instance, random_sqrt_lasso_instance
from acfgm.problems.oracles import lasso_oracle, least_squares_oracle, logistic_oracle, sqrt_lasso_oracle
from acfgm.problems.penalty import PenaltySpec, resolve_penalty


@dataclass(frozen=True)
class Family:
    name: str
    generate: Callable[[int, int, int], Dataset]
    task: str
    penalty_family: Optional[str] = None
    default_c: Optional[float] = None
    build: Callable[..., CompositeProblem] = least_squares_oracle

    def problem(self, data: Dataset, c: Optional[float] = None) -> tuple[CompositeProblem, Optional[float]]:
        """Oracle for ``data`` and the resolved penalty (None without one)."""
        if self.penalty_family is None:
            return self.build(data), None
        c = self.default_c if c is None else c
        lam = resolve_penalty(PenaltySpec(self.penalty_family, c), data)
        return self.build(data, lam), lam


FAMILIES = {
    "qp": Family("qp", random_qp_instance, "regression"),
    "lasso": Family("lasso", random_qp_instance, "regression", "lasso_frac", 0.01, lasso_oracle),
    "sqrt_lasso": Family(
        "sqrt_lasso", random_sqrt_lasso_instance, "regression", "sqrt_lasso_quantile", 1.0, sqrt_lasso_oracle
    ),
    "logistic": Family("logistic", random_logistic_instance, "classification", "logistic_frac", 0.001, logistic_oracle),
}


def get_family(name: str) -> Family:
    family = FAMILIES.get(name)
    if family is None:
        raise ConfigError(f"Unknown problem family '{name}'. Available: {', '.join(FAMILIES)}")
    return family


def list_families() -> list[str]:
    return list(FAMILIES.keys())
