"""Experiment configuration files.

Grammar (one setting per line, ``#`` starts a comment)::

    key = value
    key      := "seed" | "problem." FIELD | "run." FIELD | "solver." LABEL "." OPTION
    LABEL    := [A-Za-z0-9_-]+

Problem fields: family, data (``synthetic`` or a LIBSVM path), m, n,
penalty (the constant c), task, n_features.
Run fields: budget, stride, jobs, output, formats (comma separated), gap_tol.
Solver options: method plus the method's own options (see ``SOLVER_OPTIONS``).
"""

import dataclasses
import hashlib
import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional

from acfgm.errors import ConfigError
from acfgm.problems.families import get_family

_LABEL = re.compile(r"^[A-Za-z0-9_-]+$")

PROBLEM_FIELDS = {"family": str, "data": str, "m": int, "n": int, "penalty": float, "task": str, "n_features": int}
RUN_FIELDS = {"budget": int, "stride": int, "jobs": int, "output": str, "formats": str, "gap_tol": float}
SOLVER_OPTIONS = {
    "acfgm": {"policy", "alpha", "epsilon", "beta", "init", "scale", "gamma", "boost", "eta1", "max_trials"},
    "adgd": {"gamma", "max_trials"},
    "nsfgm": {"gamma", "epsilon", "max_trials"},
    "nspgm": {"gamma", "epsilon", "max_trials"},
    "nsagd": {"lipschitz", "accelerated"},
}
EXPORT_FORMATS = ("csv", "json")


@dataclass(frozen=True)
class ProblemSpec:
    family: str = "qp"
    data: str = "synthetic"
    m: int = 100
    n: int = 200
    penalty: Optional[float] = None
    task: Optional[str] = None
    n_features: Optional[int] = None


@dataclass(frozen=True)
class SolverSpec:
    label: str
    method: str
    options: dict = field(default_factory=dict)


@dataclass(frozen=True)
class ExperimentConfig:
    problem: ProblemSpec
    solvers: tuple[SolverSpec, ...]
    budget: int = 1000
    stride: int = 1
    seed: int = 0
    jobs: int = 1
    output: str = "traces"
    formats: tuple[str, ...] = EXPORT_FORMATS
    gap_tol: Optional[float] = None

    def __post_init__(self):
        if not self.solvers:
            raise ConfigError("at least one solver is required")
        if self.budget < 1:
            raise ConfigError(f"run.budget must be >= 1, got {self.budget}")
        if self.stride < 1:
            raise ConfigError(f"run.stride must be >= 1, got {self.stride}")
        if self.jobs < 1:
            raise ConfigError(f"run.jobs must be >= 1, got {self.jobs}")
        for fmt in self.formats:
            if fmt not in EXPORT_FORMATS:
                raise ConfigError(f"Unknown format '{fmt}'. Available: {', '.join(EXPORT_FORMATS)}")
        labels = [s.label for s in self.solvers]
        if len(set(labels)) != len(labels):
            raise ConfigError("solver labels must be unique")
        get_family(self.problem.family)


def _convert(kind, raw: str, key: str):
    try:
        return kind(raw)
    except ValueError:
        raise ConfigError(f"{key}: expected {kind.__name__}, got '{raw}'") from None


def parse_settings(lines: Iterable[str]) -> dict[str, str]:
    """Read ``key = value`` lines into a flat dict."""
    settings: dict[str, str] = {}
    for number, text in enumerate(lines, start=1):
        text = text.split("#", 1)[0].strip()
        if not text:
            continue
        key, sep, value = text.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or not key:
            raise ConfigError(f"line {number}: expected 'key = value', got '{text}'")
        if key in settings:
            raise ConfigError(f"line {number}: duplicate key '{key}'")
        settings[key] = value
    return settings


def build_config(settings: dict[str, str]) -> ExperimentConfig:
    problem: dict = {}
    run: dict = {}
    seed = 0
    solvers: dict[str, dict[str, str]] = {}

    for key, raw in settings.items():
        parts = key.split(".")
        if parts == ["seed"]:
            seed = _convert(int, raw, key)
        elif parts[0] == "problem" and len(parts) == 2 and parts[1] in PROBLEM_FIELDS:
            problem[parts[1]] = _convert(PROBLEM_FIELDS[parts[1]], raw, key)
        elif parts[0] == "run" and len(parts) == 2 and parts[1] in RUN_FIELDS:
            run[parts[1]] = _convert(RUN_FIELDS[parts[1]], raw, key)
        elif parts[0] == "solver" and len(parts) == 3 and _LABEL.match(parts[1]):
            solvers.setdefault(parts[1], {})[parts[2]] = raw
        else:
            raise ConfigError(f"unknown setting '{key}'")

    specs = []
    for label in sorted(solvers):
        options = dict(solvers[label])
        method = options.pop("method", None)
        if method is None:
            raise ConfigError(f"solver.{label}.method is required")
        allowed = SOLVER_OPTIONS.get(method)
        if allowed is None:
            raise ConfigError(f"Unknown method '{method}'. Available: {', '.join(SOLVER_OPTIONS)}")
        extra = sorted(set(options) - allowed)
        if extra:
            raise ConfigError(f"solver.{label}: unknown option(s) {', '.join(extra)} for {method}")
        specs.append(SolverSpec(label, method, options))

    if "formats" in run:
        run["formats"] = tuple(f.strip() for f in run["formats"].split(",") if f.strip())
    return ExperimentConfig(problem=ProblemSpec(**problem), solvers=tuple(specs), seed=seed, **run)


def parse_config(text: str, overrides: Optional[dict[str, str]] = None) -> ExperimentConfig:
    settings = parse_settings(text.splitlines())
    settings.update(overrides or {})
    return build_config(settings)


def load_config(path, overrides: Optional[dict[str, str]] = None) -> ExperimentConfig:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    return parse_config(text, overrides)


def _resolved_problem(problem: ProblemSpec) -> dict:
    fields = dataclasses.asdict(problem)
    if fields["penalty"] is None:
        fields["penalty"] = get_family(problem.family).default_c
    return fields


def config_hash(config: ExperimentConfig) -> str:
    """Digest of the fields that change results; output location and job count excluded.

    Solvers enter through their resolved configurations, so an omitted option and its
    default spelled out hash alike.
    """
    from acfgm.harness.solvers import build_solver

    canonical = {
        "problem": _resolved_problem(config.problem),
        "solvers": {s.label: f"{s.method}:{build_solver(s).config!r}" for s in config.solvers},
        "budget": config.budget,
        "stride": config.stride,
        "seed": config.seed,
        "gap_tol": config.gap_tol,
    }
    text = json.dumps(canonical, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(text.encode("utf-8")).hexdigest()[:16]
