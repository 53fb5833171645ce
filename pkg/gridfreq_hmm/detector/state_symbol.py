"""Ternary frequency-deviation label."""

from enum import Enum, unique
from functools import total_ordering


@total_ordering
@unique
class StateSymbol(Enum):
    """Frequency deviation state; doubles as hidden state and emitted symbol."""

    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1

    @property
    def index(self) -> int:
        """Position in the state order (-1, 0, +1), used to index matrices."""
        return self.value + 1

    @staticmethod
    def from_index(index: int) -> "StateSymbol":
        """Create instance from a matrix index."""
        return StateSymbol(int(index) - 1)

    @staticmethod
    def from_label(label) -> "StateSymbol":
        """Create instance from an integer label, accepting "+1" style text."""
        if isinstance(label, StateSymbol):
            return label
        if isinstance(label, str):
            label = int(label.strip())
        return StateSymbol(int(label))

    def to_string(self) -> str:
        """Human-readable representation of the deviation state."""
        if self == StateSymbol.NEGATIVE:
            return "Negative deviation (generation shortfall)"
        elif self == StateSymbol.POSITIVE:
            return "Positive deviation (excess generation)"
        return "No deviation"

    def __lt__(self, other):
        if isinstance(other, StateSymbol):
            return self.value < other.value
        return NotImplemented


STATE_ORDER = (StateSymbol.NEGATIVE, StateSymbol.ZERO, StateSymbol.POSITIVE)
