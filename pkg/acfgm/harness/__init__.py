"""Experiment configuration, runner, traces and summaries."""

from acfgm.harness.config import ExperimentConfig, ProblemSpec, SolverSpec, config_hash, load_config, parse_config
from acfgm.harness.runner import Workload, any_diverged, prepare, run_experiment, run_solver
from acfgm.harness.solvers import SOLVERS, build_solver, get_solver, list_solvers
from acfgm.harness.summary import SummaryRow, convergence_slope, render_table, summarize, write_summary_csv
from acfgm.harness.trace import CSV_HEADER, Trace, TraceRecord, export_trace, load_traces, read_csv, read_json
