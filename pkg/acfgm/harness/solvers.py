"""Uniform adapters over the solvers, keyed by method name."""

from dataclasses import dataclass
from typing import Any, Optional

import numpy as np

from acfgm.baselines import (
    BaselineConfig,
    adgd_iterate,
    adgd_start,
    nsagd_iterate,
    nsagd_start,
    nsfgm_iterate,
    nsfgm_start,
    nspgm_iterate,
    nspgm_start,
)
from acfgm.core.problem import CompositeProblem
from acfgm.errors import ConfigError
from acfgm.harness.config import SolverSpec
from acfgm.solver import (
    Adaptive,
    Explicit,
    FirstIterLineSearch,
    FromL0,
    Hoelder,
    Simple,
    SolverConfig,
    acfgm_iterate,
    acfgm_start,
)
from acfgm.solver import solution as acfgm_solution

Record = tuple[Optional[float], Optional[float], Optional[float]]


def _float(options: dict, key: str, default=None) -> Optional[float]:
    if key not in options:
        return default
    try:
        return float(options[key])
    except ValueError:
        raise ConfigError(f"{key}: expected a number, got '{options[key]}'") from None


def _int(options: dict, key: str, default: int) -> int:
    if key not in options:
        return default
    try:
        return int(options[key])
    except ValueError:
        raise ConfigError(f"{key}: expected an integer, got '{options[key]}'") from None


def _bool(options: dict, key: str, default: bool) -> bool:
    if key not in options:
        return default
    value = options[key].strip().lower()
    if value in ("1", "true", "yes", "on"):
        return True
    if value in ("0", "false", "no", "off"):
        return False
    raise ConfigError(f"{key}: expected a boolean, got '{options[key]}'")


@dataclass
class SolverAdapter:
    """Base adapter; subclasses bind one method's start/step functions."""

    label: str
    method: str = ""

    def start(self, problem: CompositeProblem, x0: np.ndarray) -> Any:
        raise NotImplementedError

    def step(self, state: Any, problem: CompositeProblem) -> Any:
        raise NotImplementedError

    def solution(self, state: Any) -> np.ndarray:
        return state.x

    def last_iterate(self, state: Any) -> np.ndarray:
        return self.solution(state)

    def record(self, state: Any) -> Record:
        """(eta, tau, L_local) of the latest iteration."""
        return None, None, None

    def finished(self, state: Any) -> bool:
        return False


@dataclass
class AcfgmAdapter(SolverAdapter):
    config: SolverConfig = None

    @classmethod
    def from_options(cls, label: str, options: dict) -> "AcfgmAdapter":
        policy_name = options.get("policy", "simple").strip().lower()
        alpha = _float(options, "alpha")
        if policy_name == "simple":
            policy = Simple()
        elif policy_name == "adaptive":
            policy = Adaptive(0.0 if alpha is None else alpha)
        elif policy_name == "hoelder":
            policy = Hoelder(_float(options, "epsilon", 1e-6), alpha)
        else:
            raise ConfigError(f"Unknown policy '{policy_name}'. Available: simple, adaptive, hoelder")

        init_name = options.get("init", "l0").strip().lower()
        if init_name == "l0":
            init = FromL0(scale=_float(options, "scale", 0.4))
        elif init_name == "linesearch":
            init = FirstIterLineSearch(gamma=_float(options, "gamma", 2.0), boost=_float(options, "boost", 1.0))
        elif init_name == "explicit":
            eta1 = _float(options, "eta1")
            if eta1 is None:
                raise ConfigError(f"solver.{label}.eta1 is required with init = explicit")
            init = Explicit(eta1)
        else:
            raise ConfigError(f"Unknown init '{init_name}'. Available: l0, linesearch, explicit")

        kwargs = {"policy": policy, "init": init, "max_trials": _int(options, "max_trials", 60)}
        beta = _float(options, "beta")
        if beta is not None:
            kwargs["beta"] = beta
        return cls(label, "acfgm", SolverConfig(**kwargs))

    def start(self, problem, x0):
        return acfgm_start(problem, x0, self.config)

    def step(self, state, problem):
        return acfgm_iterate(state, problem)

    def solution(self, state):
        return acfgm_solution(state)

    def last_iterate(self, state):
        return state.x

    def record(self, state):
        return state.eta_prev, state.tau_prev, state.L_last

    def finished(self, state):
        return state.stationary


@dataclass
class BaselineAdapter(SolverAdapter):
    METHOD = ""
    config: BaselineConfig = None

    @classmethod
    def from_options(cls, label: str, options: dict) -> "BaselineAdapter":
        kwargs = {"method": cls.METHOD, "max_trials": _int(options, "max_trials", 60)}
        for key in ("gamma", "epsilon", "lipschitz"):
            value = _float(options, key)
            if value is not None:
                kwargs[key] = value
        kwargs["accelerated"] = _bool(options, "accelerated", True)
        return cls(label, cls.METHOD, BaselineConfig(**kwargs))


@dataclass
class AdgdAdapter(BaselineAdapter):
    METHOD = "adgd"

    def start(self, problem, x0):
        return adgd_start(problem, x0, self.config)

    def step(self, state, problem):
        return adgd_iterate(state, problem)

    def record(self, state):
        return state.lam, None, state.L_last

    def finished(self, state):
        return state.stationary


@dataclass
class NsfgmAdapter(BaselineAdapter):
    METHOD = "nsfgm"

    def start(self, problem, x0):
        return nsfgm_start(problem, x0, self.config)

    def step(self, state, problem):
        return nsfgm_iterate(state, problem)

    def solution(self, state):
        return state.y

    def record(self, state):
        return 1.0 / state.M, state.tau, state.M


@dataclass
class NspgmAdapter(BaselineAdapter):
    METHOD = "nspgm"

    def start(self, problem, x0):
        return nspgm_start(problem, x0, self.config)

    def step(self, state, problem):
        return nspgm_iterate(state, problem)

    def record(self, state):
        return 1.0 / state.M, None, state.M


@dataclass
class NsagdAdapter(BaselineAdapter):
    METHOD = "nsagd"

    def start(self, problem, x0):
        return nsagd_start(problem, x0, self.config)

    def step(self, state, problem):
        return nsagd_iterate(state, problem)

    def solution(self, state):
        return state.y

    def record(self, state):
        return state.eta, None, state.L


BASELINE_ADAPTERS = {cls.METHOD: cls for cls in (AdgdAdapter, NsfgmAdapter, NspgmAdapter, NsagdAdapter)}

SOLVERS = {"acfgm": AcfgmAdapter, **BASELINE_ADAPTERS}


def get_solver(method: str) -> type:
    adapter = SOLVERS.get(method)
    if adapter is None:
        raise ConfigError(f"Unknown method '{method}'. Available: {', '.join(SOLVERS)}")
    return adapter


def list_solvers() -> list[str]:
    return list(SOLVERS.keys())


def build_solver(spec: SolverSpec) -> SolverAdapter:
    return get_solver(spec.method).from_options(spec.label, spec.options)
