"""Decision boundaries of the ML test."""

import math

from ..exceptions import DegenerateThresholdsError, ParameterError


class Thresholds:
    """Boundaries partitioning the measurement axis into three decision regions."""

    def __init__(self, delta_neg_zero: float, delta_zero_pos: float):
        """Initialize."""
        delta_neg_zero = float(delta_neg_zero)
        delta_zero_pos = float(delta_zero_pos)
        if not (math.isfinite(delta_neg_zero) and math.isfinite(delta_zero_pos)):
            raise ParameterError(
                f"thresholds must be finite, got ({delta_neg_zero!r}, {delta_zero_pos!r})"
            )
        if delta_neg_zero >= delta_zero_pos:
            raise DegenerateThresholdsError(delta_neg_zero, delta_zero_pos)

        self.delta_neg_zero: float = delta_neg_zero
        """Boundary (Hz) between the negative and zero regions."""

        self.delta_zero_pos: float = delta_zero_pos
        """Boundary (Hz) between the zero and positive regions."""

    def as_tuple(self) -> tuple[float, float]:
        return (self.delta_neg_zero, self.delta_zero_pos)

    def __eq__(self, other):
        if isinstance(other, Thresholds):
            return self.as_tuple() == other.as_tuple()
        return False

    def __hash__(self):
        return hash(self.as_tuple())

    def __str__(self) -> str:
        return f"delta_neg_zero={self.delta_neg_zero!r} delta_zero_pos={self.delta_zero_pos!r}"
