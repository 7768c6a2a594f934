"""Linear algebra, prox terms and the composite problem abstraction."""

from acfgm.core.counting import CountingOracle, counted
from acfgm.core.linalg import DenseVector, SparseMatrixCSR, dense_vector, matvec, matvec_t
from acfgm.core.problem import CompositeProblem
from acfgm.core.prox import ProxKind, ProxTerm, prox_step
