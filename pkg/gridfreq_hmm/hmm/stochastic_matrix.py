"""3x3 probability matrices indexed in state order (-1, 0, +1)."""

from functools import cached_property
from typing import Sequence

import numpy as np

from ..detector.state_symbol import StateSymbol
from ..exceptions import ParameterError
from ..numerics import Probability


class StochasticMatrix:
    """Immutable 3x3 matrix whose rows (axis=1) or columns (axis=0) are distributions.

    Construction checks shape and finiteness only; the stochasticity invariants
    are checked by :func:`gridfreq_hmm.hmm.validation.validate` so that a
    hand-typed matrix can be reported on rather than rejected outright.
    """

    NAME = "matrix"
    SUM_AXIS = 1
    LINE_NAME = "row"

    def __init__(self, values: Sequence[Sequence[float]]):
        """Initialize."""
        array = np.array(values, dtype=float)
        if array.shape != (3, 3):
            raise ParameterError(f"{self.NAME} must be 3x3, got shape {array.shape}")
        if not np.all(np.isfinite(array)):
            raise ParameterError(f"{self.NAME} entries must be finite")
        array.flags.writeable = False
        self._values = array

    @property
    def values(self) -> np.ndarray:
        """Read-only entries."""
        return self._values

    @cached_property
    def log_values(self) -> np.ndarray:
        """Entrywise natural log, with -inf for zero entries."""
        with np.errstate(divide="ignore"):
            logs = np.log(self._values)
        logs.flags.writeable = False
        return logs

    def line_sums(self) -> np.ndarray:
        """Sums along the direction that must add up to 1."""
        return self._values.sum(axis=self.SUM_AXIS)

    def entry(self, i: StateSymbol, j: StateSymbol) -> Probability:
        return Probability(self._values[i.index, j.index])

    def to_list(self) -> list[list[float]]:
        return self._values.tolist()

    def __eq__(self, other):
        if type(other) is type(self):
            return bool(np.array_equal(self._values, other._values))
        return False

    def __hash__(self):
        return hash((type(self).__name__, self._values.tobytes()))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self._values.tolist()})"


class TransitionMatrix(StochasticMatrix):
    """p[i, j] = P(s[k] = j | s[k-1] = i); every row sums to 1."""

    NAME = "transitions"
    SUM_AXIS = 1
    LINE_NAME = "row"


class EmissionMatrix(StochasticMatrix):
    """r[i, j] = P(x[k] = i | s[k] = j); every column sums to 1."""

    NAME = "emissions"
    SUM_AXIS = 0
    LINE_NAME = "column"

    def column(self, state: StateSymbol) -> np.ndarray:
        """Distribution of the emitted symbol given the true state."""
        return self._values[:, state.index]
