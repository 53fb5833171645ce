"""Prediction Vector."""

from typing import Sequence

import numpy as np

from ..const import USER_TOLERANCE
from ..detector.state_symbol import StateSymbol
from ..exceptions import ParameterError
from ..numerics import Probability


class PredictionVector:
    """State distribution m steps ahead."""

    def __init__(self, probs: Sequence[float], horizon: int):
        """Initialize."""
        values = np.array(probs, dtype=float)
        if values.shape != (3,) or not np.all(np.isfinite(values)):
            raise ParameterError(f"probs must be 3 finite entries, got {probs!r}")
        if abs(float(values.sum()) - 1.0) > USER_TOLERANCE:
            raise ParameterError(f"probs must sum to 1, got sum {float(values.sum())!r}")
        if isinstance(horizon, bool) or int(horizon) != horizon or horizon < 0:
            raise ParameterError(f"horizon must be a non-negative integer, got {horizon!r}")
        values.flags.writeable = False
        self.probs: np.ndarray = values
        self.horizon: int = int(horizon)

    def probability(self, state: StateSymbol) -> Probability:
        return Probability.clipped(self.probs[state.index])

    def most_likely(self) -> StateSymbol:
        return StateSymbol.from_index(int(np.argmax(self.probs)))

    def __str__(self) -> str:
        p_neg, p_zero, p_pos = (round(float(p), 4) for p in self.probs)
        return f"Horizon[{self.horizon}] P(-1)[{p_neg}] P(0)[{p_zero}] P(+1)[{p_pos}]"

    def __repr__(self) -> str:
        return f"PredictionVector({self.probs.tolist()}, horizon={self.horizon})"
