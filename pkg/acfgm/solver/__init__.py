"""The AC-FGM solver: schedules, curvature estimates, iteration and certificates."""

from acfgm.solver.acfgm import (
    ScheduleHistory,
    SolverState,
    acfgm_iterate,
    acfgm_solve,
    acfgm_start,
    averaged_iterate,
    solution,
)
from acfgm.solver.certificate import Certificate, certificate
from acfgm.solver.curvature import curvature_first, curvature_hoelder, curvature_smooth
from acfgm.solver.initial import InitResult, initial_stepsize
from acfgm.solver.policy import (
    BETA_MAX,
    DEFAULT_BETA,
    Adaptive,
    Explicit,
    FirstIterLineSearch,
    FromL0,
    Hoelder,
    Simple,
    SolverConfig,
)
from acfgm.solver.schedule import Violation, validate_schedule
from acfgm.solver.stepsize import stepsize_adaptive, stepsize_simple
