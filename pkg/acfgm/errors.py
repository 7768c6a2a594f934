"""Error taxonomy shared by solvers, problem loaders and the harness.

The CLI maps these onto exit codes: ConfigError -> 1, DataError -> 2,
DivergedError -> 3.
"""

from typing import Optional


class AcfgmError(Exception):
    """Base class for every error raised by this package."""


class InvalidInputError(AcfgmError, ValueError):
    """Dimension mismatch, non-finite input or nonpositive stepsize."""


class InvalidStateError(AcfgmError, RuntimeError):
    """Operation requested in a state where it is undefined."""


class ConfigError(AcfgmError, ValueError):
    """Bad solver, penalty or experiment configuration."""


class DivergedError(AcfgmError, RuntimeError):
    """A solver produced non-finite values or exhausted its line search."""

    def __init__(self, message: str, iteration: int = 0, trials: Optional[int] = None):
        super().__init__(message)
        self.iteration = iteration
        self.trials = trials


class DataError(AcfgmError):
    """Dataset could not be read or is unusable."""


class ParseError(DataError, ValueError):
    """Malformed LIBSVM text."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class IngestionError(DataError, ValueError):
    """Readable data that violates a dataset invariant (e.g. labels)."""
