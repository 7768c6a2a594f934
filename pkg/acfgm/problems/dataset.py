"""Datasets: a design matrix with targets or labels."""

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from acfgm.core.linalg import SparseMatrixCSR
from acfgm.errors import IngestionError

TASKS = ("regression", "classification")


@dataclass(frozen=True, eq=False)
class Dataset:
    """``provenance`` is a file path or ``seed=<n>``; ``x_star`` and
    ``optimal_value`` are known only for planted synthetic instances."""

    A: SparseMatrixCSR
    b: np.ndarray
    name: str
    provenance: str
    task: str = "regression"
    x_star: Optional[np.ndarray] = field(default=None, repr=False)
    optimal_value: Optional[float] = None

    def __post_init__(self):
        b = np.asarray(self.b, dtype=np.float64)
        if b.shape != (self.A.rows,):
            raise IngestionError(f"{self.name}: {self.A.rows} rows but {b.shape[0]} targets")
        if self.task not in TASKS:
            raise IngestionError(f"{self.name}: unknown task '{self.task}'")
        if self.task == "classification" and not np.all(np.abs(b) == 1.0):
            raise IngestionError(f"{self.name}: classification labels must be -1 or +1")
        b.flags.writeable = False
        object.__setattr__(self, "b", b)

    @property
    def m(self) -> int:
        return self.A.rows

    @property
    def n(self) -> int:
        return self.A.cols

    def same_content(self, other: "Dataset") -> bool:
        return self.A == other.A and np.array_equal(self.b, other.b) and self.task == other.task
