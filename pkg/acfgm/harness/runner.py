"""Run every configured solver on one problem and collect traces."""

import logging
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from acfgm.core.counting import counted
from acfgm.core.problem import CompositeProblem
from acfgm.errors import DivergedError, InvalidStateError
from acfgm.harness.config import ExperimentConfig, config_hash
from acfgm.harness.solvers import SolverAdapter, build_solver
from acfgm.harness.trace import Trace, TraceRecord
from acfgm.problems.dataset import Dataset
from acfgm.problems.families import get_family
from acfgm.problems.libsvm import libsvm_load

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Workload:
    """The problem every solver of an experiment runs on."""

    data: Dataset
    problem: CompositeProblem
    x0: np.ndarray
    penalty: Optional[float]
    reference: Optional[float]


def load_dataset(config: ExperimentConfig) -> Dataset:
    spec = config.problem
    family = get_family(spec.family)
    if spec.data == "synthetic":
        return family.generate(spec.m, spec.n, config.seed)
    return libsvm_load(spec.data, task=spec.task or family.task, n_features=spec.n_features)


def prepare(config: ExperimentConfig) -> Workload:
    data = load_dataset(config)
    problem, lam = get_family(config.problem.family).problem(data, config.problem.penalty)
    # a planted optimum describes the unpenalized problem only
    reference = data.optimal_value if lam is None else None
    return Workload(data, problem, np.zeros(data.n), lam, reference)


def run_solver(
    adapter: SolverAdapter,
    workload: Workload,
    budget: int,
    stride: int = 1,
    gap_tol: Optional[float] = None,
    digest: str = "",
) -> Trace:
    """One solver run; divergence is recorded in the trace, not raised."""
    problem, counter = counted(workload.problem)
    trace = Trace(
        solver=adapter.label,
        method=adapter.method,
        problem=workload.problem.name,
        config_hash=digest,
        penalty=workload.penalty,
    )
    reference = workload.reference
    cpu = 0.0
    wall0 = time.perf_counter()
    state = None
    try:
        t0 = time.thread_time()
        state = adapter.start(problem, workload.x0)
        cpu += time.thread_time() - t0
        trace.init_calls = state.init_calls
        for k in range(1, budget + 1):
            t0 = time.thread_time()
            adapter.step(state, problem)
            cpu += time.thread_time() - t0
            done = k == budget or adapter.finished(state)
            reported = problem.objective(adapter.solution(state))
            gap = None if reference is None else reported - reference
            if gap_tol is not None and gap is not None and gap <= gap_tol:
                done = True
            if k % stride == 0 or k == 1 or done:
                eta, tau, L = adapter.record(state)
                trace.records.append(
                    TraceRecord(
                        iteration=k,
                        oracle_calls=state.oracle_calls,
                        elapsed_seconds=cpu,
                        objective=reported,
                        gap=gap,
                        eta=eta,
                        tau=tau,
                        L_local=L,
                        objective_last=problem.objective(adapter.last_iterate(state)),
                    )
                )
            if done:
                break
    except DivergedError as exc:
        trace.diverged = True
        trace.message = str(exc)
        log.warning("%s diverged on %s: %s", adapter.label, trace.problem, exc)
    trace.cpu_seconds = cpu
    trace.wall_seconds = time.perf_counter() - wall0
    if state is not None:
        if counter.calls == state.oracle_calls:
            trace.oracle_audit = "ok"
        else:
            trace.oracle_audit = f"mismatch: solver counted {state.oracle_calls}, oracle saw {counter.calls}"
            log.warning("%s: %s", adapter.label, trace.oracle_audit)
    return trace


def estimate_reference(traces: list[Trace]) -> Optional[float]:
    """Lowest finite objective recorded by any solver."""
    values = [r.objective for t in traces for r in t.records if math.isfinite(r.objective)]
    return min(values) if values else None


def run_experiment(config: ExperimentConfig, workload: Optional[Workload] = None) -> list[Trace]:
    """Traces sorted by run key; gaps are filled against the known or estimated optimum."""
    adapters = [build_solver(spec) for spec in config.solvers]
    workload = workload or prepare(config)
    digest = config_hash(config)
    log.info("running %d solver(s) on %s (budget %d)", len(adapters), workload.problem.name, config.budget)

    def job(adapter: SolverAdapter) -> Trace:
        return run_solver(adapter, workload, config.budget, config.stride, config.gap_tol, digest)

    if config.jobs > 1 and len(adapters) > 1:
        with ThreadPoolExecutor(max_workers=config.jobs) as pool:
            traces = list(pool.map(job, adapters))
    else:
        traces = [job(a) for a in adapters]
    traces.sort(key=lambda t: t.run_key)

    reference = workload.reference
    estimated = reference is None
    if estimated:
        reference = estimate_reference(traces)
    if reference is not None:
        for trace in traces:
            trace.apply_reference(reference)
            if estimated and any(r.gap < 0 for r in trace.records):
                raise InvalidStateError("estimated optimum exceeds a recorded objective")
    return traces


def any_diverged(traces: list[Trace]) -> bool:
    return any(t.diverged for t in traces)

