"""m-step prediction of the hidden state distribution."""

from typing import Sequence

import numpy as np

from ..detector.state_symbol import StateSymbol
from ..exceptions import ModelValidationError, ParameterError
from ..hmm.stochastic_matrix import TransitionMatrix
from ..hmm.violation import check_matrix
from ..logger import LOGGER
from ..numerics.sampling import check_weights
from .prediction_vector import PredictionVector


def _check_inputs(transitions: TransitionMatrix, initial: Sequence[float], horizon: int):
    if not isinstance(transitions, TransitionMatrix):
        transitions = TransitionMatrix(transitions)
    violations = check_matrix(transitions)
    if violations:
        raise ModelValidationError(violations[0])
    if isinstance(horizon, bool) or int(horizon) != horizon or horizon < 0:
        raise ParameterError(f"horizon must be a non-negative integer, got {horizon!r}")
    return transitions, check_weights(initial, "initial")


def predict_series(
    transitions: TransitionMatrix, initial: Sequence[float], horizon: int
) -> list[PredictionVector]:
    """Distributions for horizons 0..m, stepping pi_k = pi_{k-1} P."""
    transitions, current = _check_inputs(transitions, initial, horizon)
    matrix = transitions.values
    series = [PredictionVector(current, 0)]
    for step in range(1, int(horizon) + 1):
        current = current @ matrix
        series.append(PredictionVector(current, step))
    LOGGER.debug("Predicted %d steps ahead: %s", horizon, series[-1])
    return series


def predict(
    transitions: TransitionMatrix, initial: Sequence[float], horizon: int
) -> PredictionVector:
    """initial * P^m under the row-vector convention; m = 0 returns initial."""
    return predict_series(transitions, initial, horizon)[-1]


def forecast_from_state(
    transitions: TransitionMatrix, state: StateSymbol, horizon: int
) -> PredictionVector:
    """Prediction started from a known (or decoded) current state."""
    start = np.zeros(3)
    start[StateSymbol.from_label(state).index] = 1.0
    return predict(transitions, start, horizon)
