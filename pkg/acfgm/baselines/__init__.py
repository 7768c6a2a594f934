"""Baseline first-order solvers with their oracle-call accounting."""

from acfgm.baselines.adgd import AdgdState, adgd_iterate, adgd_start
from acfgm.baselines.config import METHODS, BaselineConfig
from acfgm.baselines.nsagd import NsagdState, nsagd_iterate, nsagd_start
from acfgm.baselines.nsfgm import NsfgmState, nsfgm_iterate, nsfgm_start
from acfgm.baselines.nspgm import NspgmState, nspgm_iterate, nspgm_start
