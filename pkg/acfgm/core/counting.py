"""Call-counting proxy for a smooth first-order oracle.

Wraps the ``smooth_oracle`` of a problem, counts every invocation and
logs each call with its elapsed time at DEBUG:

    [acfgm.core.counting] -> lasso oracle #12 (n=200)
    [acfgm.core.counting] <- lasso oracle #12 f=0.0315  (0.1ms)

Exceptions are logged at WARNING before they propagate. The harness uses
it to audit the counters solvers keep themselves.
"""

import logging
import threading
import time

import numpy as np

from acfgm.core.problem import CompositeProblem, SmoothOracle

log = logging.getLogger(__name__)


class CountingOracle:
    """Transparent callable proxy that counts oracle invocations."""

    __slots__ = ("_wrapped", "_label", "_lock", "calls")

    def __init__(self, wrapped: SmoothOracle, label: str = "oracle"):
        self._wrapped = wrapped
        self._label = label
        self._lock = threading.Lock()
        self.calls = 0

    def __call__(self, x: np.ndarray):
        with self._lock:
            self.calls += 1
            index = self.calls
        debug = log.isEnabledFor(logging.DEBUG)
        if debug:
            log.debug("-> %s #%d (n=%d)", self._label, index, x.shape[0])
        t0 = time.perf_counter()
        try:
            value, grad = self._wrapped(x)
        except Exception as exc:
            elapsed_ms = (time.perf_counter() - t0) * 1000
            log.warning("!! %s #%d raised %s: %s  (%.1fms)", self._label, index, type(exc).__name__, exc, elapsed_ms)
            raise
        if debug:
            elapsed_ms = (time.perf_counter() - t0) * 1000
            log.debug("<- %s #%d f=%.6g  (%.1fms)", self._label, index, value, elapsed_ms)
        return value, grad

    def reset(self) -> None:
        with self._lock:
            self.calls = 0

    def __repr__(self) -> str:
        return f"<CountingOracle {self._label} calls={self.calls}>"


def counted(problem: CompositeProblem) -> tuple[CompositeProblem, CountingOracle]:
    """Return a copy of ``problem`` whose oracle calls are counted."""
    counter = CountingOracle(problem.smooth_oracle, label=f"{problem.name} oracle")
    return problem.with_oracle(counter), counter
