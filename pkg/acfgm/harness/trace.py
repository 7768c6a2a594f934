"""Per-iteration traces and their CSV/JSON files."""

import csv
import json
import logging
import re
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path
from typing import Iterable, Optional

from acfgm.errors import DataError

log = logging.getLogger(__name__)

CSV_COLUMNS = ("iteration", "oracle_calls", "elapsed_seconds", "objective", "gap", "eta", "tau", "L_local")
CSV_HEADER = ",".join(CSV_COLUMNS)


@dataclass
class TraceRecord:
    """One logged iteration. ``elapsed_seconds`` is CPU time of the solver."""

    iteration: int
    oracle_calls: int
    elapsed_seconds: float
    objective: float
    gap: Optional[float] = None
    eta: Optional[float] = None
    tau: Optional[float] = None
    L_local: Optional[float] = None
    objective_last: Optional[float] = None

    def __str__(self):
        gap = "-" if self.gap is None else f"{self.gap:.3e}"
        return f"[{self.iteration:>6}] calls={self.oracle_calls} obj={self.objective:.10g} gap={gap}"


@dataclass
class Trace:
    solver: str
    method: str
    problem: str
    config_hash: str = ""
    records: list[TraceRecord] = field(default_factory=list)
    init_calls: int = 0
    reference: Optional[float] = None
    penalty: Optional[float] = None
    diverged: bool = False
    message: str = ""
    cpu_seconds: float = 0.0
    wall_seconds: float = 0.0
    oracle_audit: str = ""

    @property
    def last(self) -> Optional[TraceRecord]:
        return self.records[-1] if self.records else None

    @property
    def run_key(self) -> tuple[str, str]:
        return (self.problem, self.solver)

    def apply_reference(self, reference: float) -> None:
        self.reference = reference
        for record in self.records:
            record.gap = record.objective - reference

    def metadata(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self) if f.name != "records"}


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _slug(text: str) -> str:
    return re.sub(r"[^A-Za-z0-9_.-]+", "_", text).strip("_")


def trace_stem(trace: Trace) -> str:
    return f"{_slug(trace.problem)}__{_slug(trace.solver)}"


def write_csv(trace: Trace, path: Path) -> None:
    with path.open("w", newline="", encoding="utf-8") as handle:
        handle.write(CSV_HEADER + "\n")
        writer = csv.writer(handle, lineterminator="\n")
        for r in trace.records:
            writer.writerow([_cell(getattr(r, name)) for name in CSV_COLUMNS])


def write_json(trace: Trace, path: Path) -> None:
    payload = {"metadata": trace.metadata(), "records": [asdict(r) for r in trace.records]}
    with path.open("w", encoding="utf-8") as handle:
        json.dump(payload, handle, indent=1)
        handle.write("\n")


def export_trace(traces: Iterable[Trace], directory, formats: Iterable[str] = ("csv", "json")) -> list[Path]:
    """Write one file per (solver, problem) and format; returns the paths."""
    directory = Path(directory)
    formats = tuple(formats)
    try:
        directory.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise DataError(f"cannot create {directory}: {exc}") from exc
    written = []
    for trace in traces:
        stem = trace_stem(trace)
        for fmt in formats:
            path = directory / f"{stem}.{fmt}"
            try:
                if fmt == "csv":
                    write_csv(trace, path)
                elif fmt == "json":
                    write_json(trace, path)
                else:
                    raise DataError(f"unknown trace format '{fmt}'")
            except OSError as exc:
                raise DataError(f"cannot write {path}: {exc}") from exc
            log.debug("wrote %s", path)
            written.append(path)
    return written


def _optional(text: str, kind=float):
    return None if text == "" else kind(text)


def read_csv(path) -> list[TraceRecord]:
    path = Path(path)
    with path.open("r", newline="", encoding="utf-8") as handle:
        reader = csv.reader(handle)
        header = next(reader, None)
        if header is None or ",".join(header) != CSV_HEADER:
            raise DataError(f"{path}: not a trace file (header {header!r})")
        records = []
        for row in reader:
            if not row:
                continue
            values = dict(zip(CSV_COLUMNS, row))
            records.append(
                TraceRecord(
                    iteration=int(values["iteration"]),
                    oracle_calls=int(values["oracle_calls"]),
                    elapsed_seconds=float(values["elapsed_seconds"]),
                    objective=float(values["objective"]),
                    gap=_optional(values["gap"]),
                    eta=_optional(values["eta"]),
                    tau=_optional(values["tau"]),
                    L_local=_optional(values["L_local"]),
                )
            )
    return records


def read_json(path) -> Trace:
    path = Path(path)
    with path.open("r", encoding="utf-8") as handle:
        try:
            payload = json.load(handle)
        except json.JSONDecodeError as exc:
            raise DataError(f"{path}: invalid JSON ({exc})") from exc
    try:
        trace = Trace(**payload["metadata"])
        trace.records = [TraceRecord(**r) for r in payload["records"]]
    except (KeyError, TypeError) as exc:
        raise DataError(f"{path}: not a trace file ({exc})") from exc
    return trace


def load_traces(directory) -> list[Trace]:
    """Read every trace in ``directory``; JSON wins over a CSV with the same stem."""
    directory = Path(directory)
    if not directory.is_dir():
        raise DataError(f"{directory} is not a directory")
    traces = {}
    for path in sorted(directory.glob("*.json")):
        traces[path.stem] = read_json(path)
    for path in sorted(directory.glob("*.csv")):
        if path.stem in traces:
            continue
        problem, _, solver = path.stem.partition("__")
        trace = Trace(solver=solver or path.stem, method="", problem=problem)
        trace.records = read_csv(path)
        traces[path.stem] = trace
    return [traces[k] for k in sorted(traces)]
