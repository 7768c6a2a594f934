"""Dense vectors and CSR matrices used by oracles and solvers.

Vectors are plain float64 numpy arrays; ``dense_vector`` validates and
freezes them. ``SparseMatrixCSR`` checks the CSR invariants once and then
delegates products to ``scipy.sparse``.
"""

from typing import Iterable, Optional

import numpy as np
import scipy.sparse as sp

from acfgm.errors import InvalidInputError

DenseVector = np.ndarray


def dense_vector(values, length: Optional[int] = None) -> DenseVector:
    """Return a read-only finite float64 1-D copy of ``values``."""
    vec = np.array(values, dtype=np.float64, copy=True)
    if vec.ndim == 0:
        vec = vec.reshape(1)
    if vec.ndim != 1:
        raise InvalidInputError(f"expected a 1-D vector, got shape {vec.shape}")
    if length is not None and vec.shape[0] != length:
        raise InvalidInputError(f"expected length {length}, got {vec.shape[0]}")
    if not np.all(np.isfinite(vec)):
        raise InvalidInputError("vector has non-finite entries")
    vec.flags.writeable = False
    return vec


def check_length(vec: np.ndarray, length: int, name: str = "vector") -> None:
    if vec.ndim != 1 or vec.shape[0] != length:
        raise InvalidInputError(f"{name} has shape {vec.shape}, expected ({length},)")


class SparseMatrixCSR:
    """Compressed sparse row matrix with validated structure."""

    __slots__ = ("rows", "cols", "row_ptr", "col_idx", "values", "_mat", "_mat_t")

    def __init__(self, rows: int, cols: int, row_ptr, col_idx, values):
        row_ptr = np.asarray(row_ptr, dtype=np.int64)
        col_idx = np.asarray(col_idx, dtype=np.int64)
        values = np.asarray(values, dtype=np.float64)
        if rows < 0 or cols < 0:
            raise InvalidInputError(f"negative shape ({rows}, {cols})")
        if row_ptr.shape != (rows + 1,):
            raise InvalidInputError(f"row_ptr must have length {rows + 1}")
        nnz = col_idx.shape[0]
        if values.shape != (nnz,):
            raise InvalidInputError("values and col_idx lengths differ")
        if row_ptr[0] != 0 or row_ptr[-1] != nnz:
            raise InvalidInputError("row_ptr must start at 0 and end at nnz")
        if np.any(np.diff(row_ptr) < 0):
            raise InvalidInputError("row_ptr must be nondecreasing")
        if nnz and (col_idx.min() < 0 or col_idx.max() >= cols):
            raise InvalidInputError(f"column index out of range [0, {cols})")
        if nnz > 1:
            # a step that is not a row start must strictly increase
            starts = np.zeros(nnz, dtype=bool)
            starts[row_ptr[:-1][row_ptr[:-1] < nnz]] = True
            steps = np.diff(col_idx)
            if np.any((steps <= 0) & ~starts[1:]):
                raise InvalidInputError("column indices must strictly increase within a row")
        if not np.all(np.isfinite(values)):
            raise InvalidInputError("matrix has non-finite entries")
        for arr in (row_ptr, col_idx, values):
            arr.flags.writeable = False
        self.rows = int(rows)
        self.cols = int(cols)
        self.row_ptr = row_ptr
        self.col_idx = col_idx
        self.values = values
        self._mat = sp.csr_array((values, col_idx, row_ptr), shape=(rows, cols))
        self._mat_t = self._mat.T.tocsr()

    @classmethod
    def from_dense(cls, dense) -> "SparseMatrixCSR":
        arr = np.atleast_2d(np.asarray(dense, dtype=np.float64))
        return cls.from_scipy(sp.csr_array(arr))

    @classmethod
    def from_scipy(cls, mat) -> "SparseMatrixCSR":
        csr = sp.csr_array(mat)
        csr.sum_duplicates()
        csr.sort_indices()
        return cls(csr.shape[0], csr.shape[1], csr.indptr, csr.indices, csr.data)

    @classmethod
    def from_triplets(cls, rows: int, cols: int, row_idx, col_idx, values) -> "SparseMatrixCSR":
        """Build from COO triplets; repeated (row, col) entries are summed."""
        coo = sp.coo_array((np.asarray(values, dtype=np.float64), (row_idx, col_idx)), shape=(rows, cols))
        return cls.from_scipy(coo.tocsr())

    @classmethod
    def from_rows(cls, rows: Iterable[list[tuple[int, float]]], cols: int) -> "SparseMatrixCSR":
        """Build from per-row ``[(col, value), ...]`` lists."""
        row_ptr = [0]
        col_idx: list[int] = []
        values: list[float] = []
        for row in rows:
            for col, value in row:
                col_idx.append(col)
                values.append(value)
            row_ptr.append(len(col_idx))
        return cls(len(row_ptr) - 1, cols, row_ptr, col_idx, values)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def nnz(self) -> int:
        return int(self.col_idx.shape[0])

    def to_scipy(self) -> sp.csr_array:
        return self._mat

    def to_dense(self) -> np.ndarray:
        return self._mat.toarray()

    def row(self, i: int) -> tuple[np.ndarray, np.ndarray]:
        lo, hi = self.row_ptr[i], self.row_ptr[i + 1]
        return self.col_idx[lo:hi], self.values[lo:hi]

    def scale_rows(self, factors: np.ndarray) -> "SparseMatrixCSR":
        """Return diag(factors) @ self."""
        factors = np.asarray(factors, dtype=np.float64)
        check_length(factors, self.rows, "row factors")
        scaled = self.values * np.repeat(factors, np.diff(self.row_ptr))
        return SparseMatrixCSR(self.rows, self.cols, self.row_ptr, self.col_idx, scaled)

    def column_norms(self) -> np.ndarray:
        """Euclidean norm of every column."""
        return np.sqrt(np.bincount(self.col_idx, weights=self.values**2, minlength=self.cols))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparseMatrixCSR):
            return NotImplemented
        return (
            self.shape == other.shape
            and np.array_equal(self.row_ptr, other.row_ptr)
            and np.array_equal(self.col_idx, other.col_idx)
            and np.array_equal(self.values, other.values)
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"<SparseMatrixCSR {self.rows}x{self.cols} nnz={self.nnz}>"


def matvec(A: SparseMatrixCSR, x: np.ndarray) -> np.ndarray:
    """Return A @ x."""
    x = np.asarray(x, dtype=np.float64)
    check_length(x, A.cols, "x")
    return A._mat @ x


def matvec_t(A: SparseMatrixCSR, v: np.ndarray) -> np.ndarray:
    """Return A.T @ v."""
    v = np.asarray(v, dtype=np.float64)
    check_length(v, A.rows, "v")
    return A._mat_t @ v
