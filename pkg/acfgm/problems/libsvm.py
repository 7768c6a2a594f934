"""LIBSVM sparse text format.

One sample per line: ``label idx:val idx:val ...`` with 1-based, strictly
increasing indices. Blank lines and lines starting with ``#`` are skipped.
"""

import logging
import math
from pathlib import Path
from typing import IO, Iterable, Optional

import numpy as np

from acfgm.core.linalg import SparseMatrixCSR
from acfgm.errors import IngestionError, ParseError
from acfgm.problems.dataset import Dataset

log = logging.getLogger(__name__)


def _number(token: str, line: int, what: str) -> float:
    if not token.isascii():
        raise ParseError(f"malformed {what} '{token}'", line)
    try:
        value = float(token)
    except ValueError:
        raise ParseError(f"malformed {what} '{token}'", line) from None
    if not math.isfinite(value):
        raise ParseError(f"non-finite {what} '{token}'", line)
    return value


def _parse_line(text: str, line: int) -> tuple[float, list[tuple[int, float]]]:
    tokens = text.split()
    label = _number(tokens[0], line, "label")
    row: list[tuple[int, float]] = []
    last = 0
    for token in tokens[1:]:
        idx_text, sep, val_text = token.partition(":")
        if not sep or not (idx_text.isascii() and idx_text.isdigit()):
            raise ParseError(f"malformed feature '{token}'", line)
        idx = int(idx_text)
        if idx == 0:
            raise ParseError("feature index 0 (indices are 1-based)", line)
        if idx <= last:
            raise ParseError(f"feature index {idx} does not increase (previous {last})", line)
        row.append((idx - 1, _number(val_text, line, "value")))
        last = idx
    return label, row


def map_labels(labels: np.ndarray, name: str) -> np.ndarray:
    """Map binary labels to {-1, +1}: smaller -> -1, larger -> +1."""
    distinct = np.unique(labels)
    if np.all(np.isin(distinct, (-1.0, 1.0))):
        return labels
    if distinct.shape[0] != 2:
        raise IngestionError(f"{name}: binary classification needs two label values, found {distinct.tolist()}")
    log.info("%s: mapping labels %r -> -1, %r -> +1", name, distinct[0], distinct[1])
    return np.where(labels == distinct[1], 1.0, -1.0)


def libsvm_parse(
    stream: Iterable[str],
    task: str = "classification",
    n_features: Optional[int] = None,
    name: str = "libsvm",
    provenance: str = "<stream>",
) -> Dataset:
    labels: list[float] = []
    rows: list[list[tuple[int, float]]] = []
    width = 0
    for line, text in enumerate(stream, start=1):
        text = text.strip()
        if not text or text.startswith("#"):
            continue
        label, row = _parse_line(text, line)
        labels.append(label)
        rows.append(row)
        if row:
            width = max(width, row[-1][0] + 1)
    if n_features is not None:
        if n_features < width:
            raise IngestionError(f"{name}: feature index {width} exceeds n_features={n_features}")
        width = n_features
    b = np.array(labels, dtype=np.float64)
    if task == "classification":
        b = map_labels(b, name)
    log.info("%s: read %d samples with %d features", name, len(rows), width)
    return Dataset(A=SparseMatrixCSR.from_rows(rows, width), b=b, name=name, provenance=provenance, task=task)


def libsvm_load(path, task: str = "classification", n_features: Optional[int] = None) -> Dataset:
    path = Path(path)
    try:
        with path.open("r", encoding="utf-8") as handle:
            return libsvm_parse(handle, task=task, n_features=n_features, name=path.stem, provenance=str(path))
    except OSError as exc:
        raise IngestionError(f"cannot read {path}: {exc}") from exc


def _label_text(value: float, task: str) -> str:
    if task == "classification":
        return "+1" if value > 0 else "-1"
    return repr(float(value))


def libsvm_dump(data: Dataset, stream: IO[str]) -> None:
    """Write ``data`` so that ``libsvm_parse`` reads it back unchanged."""
    for i in range(data.m):
        cols, vals = data.A.row(i)
        features = " ".join(f"{c + 1}:{float(v)!r}" for c, v in zip(cols, vals))
        label = _label_text(data.b[i], data.task)
        stream.write(f"{label} {features}\n" if features else f"{label}\n")
