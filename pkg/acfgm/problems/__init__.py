"""Problem oracles, instance generators, LIBSVM ingestion and penalties."""

from acfgm.problems.dataset import Dataset
from acfgm.problems.families import FAMILIES, Family, get_family, list_families
from acfgm.problems.generate import random_logistic_instance, random_qp_instance, random_sqrt_lasso_instance
from acfgm.problems.libsvm import libsvm_dump, libsvm_load, libsvm_parse
from acfgm.problems.oracles import lasso_oracle, least_squares_oracle, logistic_oracle, sqrt_lasso_oracle
from acfgm.problems.penalty import PenaltySpec, norm_ppf, resolve_penalty
from acfgm.problems.spectral import power_iteration
