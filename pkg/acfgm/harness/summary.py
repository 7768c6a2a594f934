"""Per-solver summary tables and convergence-rate fits."""

import csv
import math
from dataclasses import astuple, dataclass
from typing import IO, Iterable, Optional

import numpy as np

from acfgm.harness.trace import Trace

HEADERS = ("Solver", "Method", "Problem", "Iterations", "CPU s/1000 it", "Calls/it", "Final gap", "Status")


@dataclass(frozen=True)
class SummaryRow:
    solver: str
    method: str
    problem: str
    iterations: int
    cpu_per_1000: Optional[float]
    calls_per_iteration: Optional[float]
    final_gap: Optional[float]
    status: str


def summarize(traces: Iterable[Trace]) -> list[SummaryRow]:
    rows = []
    for trace in traces:
        last = trace.last
        status = "diverged" if trace.diverged else "ok"
        if last is None:
            rows.append(SummaryRow(trace.solver, trace.method, trace.problem, 0, None, None, None, status))
            continue
        k = last.iteration
        rows.append(
            SummaryRow(
                solver=trace.solver,
                method=trace.method,
                problem=trace.problem,
                iterations=k,
                cpu_per_1000=1000.0 * last.elapsed_seconds / k,
                # initialization calls are not part of the per-iteration cost
                calls_per_iteration=(last.oracle_calls - trace.init_calls) / k,
                final_gap=last.gap,
                status=status,
            )
        )
    return sorted(rows, key=lambda r: (r.problem, r.solver))


def _fmt(value, spec: str) -> str:
    if value is None:
        return "-"
    if isinstance(value, float):
        return format(value, spec)
    return str(value)


def _display(row: SummaryRow) -> tuple[str, ...]:
    return (
        row.solver,
        row.method or "-",
        row.problem,
        str(row.iterations),
        _fmt(row.cpu_per_1000, ".4f"),
        _fmt(row.calls_per_iteration, ".2f"),
        _fmt(row.final_gap, ".3e"),
        row.status,
    )


def render_table(rows: list[SummaryRow]) -> str:
    """Aligned plain-text table; empty string for no rows."""
    if not rows:
        return ""
    cells = [_display(r) for r in rows]
    widths = [len(h) for h in HEADERS]
    for row in cells:
        for i, val in enumerate(row):
            widths[i] = max(widths[i], len(val))
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    lines = [fmt.format(*HEADERS), fmt.format(*("-" * w for w in widths))]
    lines.extend(fmt.format(*row) for row in cells)
    return "\n".join(lines)


def write_summary_csv(rows: list[SummaryRow], stream: IO[str]) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(
        ["solver", "method", "problem", "iterations", "cpu_per_1000", "calls_per_iteration", "final_gap", "status"]
    )
    for row in rows:
        writer.writerow(["" if v is None else (repr(v) if isinstance(v, float) else v) for v in astuple(row)])


def convergence_slope(trace: Trace, k_min: int, k_max: int, floor: float = 0.0) -> Optional[float]:
    """Least-squares slope of log(gap) against log(k) over [k_min, k_max].

    Records with gap <= ``floor`` are skipped; None when fewer than two remain.
    """
    points = [
        (math.log(r.iteration), math.log(r.gap))
        for r in trace.records
        if k_min <= r.iteration <= k_max and r.gap is not None and r.gap > floor
    ]
    if len(points) < 2:
        return None
    x, y = np.array(points).T
    slope, _ = np.polyfit(x, y, 1)
    return float(slope)
