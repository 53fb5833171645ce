"""Ordered, non-empty sequence of state symbols."""

from typing import Iterable, Iterator, Union

import numpy as np

from ..detector.state_symbol import StateSymbol
from ..exceptions import ParameterError

SymbolLike = Union[StateSymbol, int, str]


class SymbolSequence:
    """Hidden, emitted or estimated sequence; stored as state indices 0..2."""

    def __init__(self, symbols: Iterable[SymbolLike]):
        """Initialize."""
        try:
            indices = [StateSymbol.from_label(symbol).index for symbol in symbols]
        except ValueError as err:
            raise ParameterError(f"Invalid state symbol: {err}") from err
        self._indices = self._freeze(np.array(indices, dtype=np.int64))

    @staticmethod
    def _freeze(indices: np.ndarray) -> np.ndarray:
        if indices.ndim != 1 or indices.size == 0:
            raise ParameterError("A symbol sequence must contain at least one symbol")
        indices.flags.writeable = False
        return indices

    @classmethod
    def from_indices(cls, indices) -> "SymbolSequence":
        """Create instance from state indices (0, 1, 2 for -1, 0, +1)."""
        array = np.array(indices, dtype=np.int64)
        if array.size and (array.min() < 0 or array.max() > 2):
            raise ParameterError("State indices must lie in {0, 1, 2}")
        sequence = cls.__new__(cls)
        sequence._indices = cls._freeze(array)
        return sequence

    @property
    def indices(self) -> np.ndarray:
        """Read-only state indices."""
        return self._indices

    @property
    def labels(self) -> np.ndarray:
        """Integer labels in {-1, 0, +1}."""
        return self._indices - 1

    def to_labels(self) -> list[int]:
        return self.labels.tolist()

    def __len__(self) -> int:
        return int(self._indices.size)

    def __iter__(self) -> Iterator[StateSymbol]:
        return (StateSymbol.from_index(index) for index in self._indices)

    def __getitem__(self, k: int) -> StateSymbol:
        return StateSymbol.from_index(self._indices[k])

    def __eq__(self, other):
        if isinstance(other, SymbolSequence):
            return bool(np.array_equal(self._indices, other._indices))
        return False

    def __hash__(self):
        return hash(self._indices.tobytes())

    def __repr__(self) -> str:
        return f"SymbolSequence({self.to_labels()})"
