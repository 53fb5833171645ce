"""Probability value."""

import math

from ..exceptions import ParameterError


class Probability(float):
    """A real number constrained to [0, 1].

    Behaves as a ``float`` everywhere, so it mixes freely with numpy arithmetic.
    """

    def __new__(cls, value) -> "Probability":
        value = float(value)
        if not math.isfinite(value) or value < 0.0 or value > 1.0:
            raise ParameterError(f"Probability must lie in [0, 1], got {value!r}")
        return super().__new__(cls, value)

    @classmethod
    def clipped(cls, value: float) -> "Probability":
        """Create from a computed value carrying rounding just outside [0, 1]."""
        return cls(min(1.0, max(0.0, float(value))))

    @property
    def value(self) -> float:
        return float(self)

    def complement(self) -> "Probability":
        return Probability(1.0 - float(self))

    def __repr__(self) -> str:
        return f"Probability({float(self)!r})"
