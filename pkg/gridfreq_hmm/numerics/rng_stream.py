"""Seedable, independently derivable random streams."""

from typing import Optional, Union

import numpy as np

from ..exceptions import ParameterError

_MAX_SEED = 2**64


class RngStream:
    """Deterministic random stream identified by ``(seed, stream_index)``.

    Backed by numpy's Philox 4x64 counter-based generator. The stream's key is
    derived through ``SeedSequence(seed, spawn_key=(stream_index,))``, so stream
    ``t`` is available directly without advancing any other stream, and equal
    ``(seed, stream_index)`` pairs give bitwise-identical draws on every platform.
    Gaussian draws use numpy's ziggurat sampler.

    A stream is single-owner state: do not draw from one stream on two threads.
    """

    def __init__(self, seed: int, stream_index: int = 0):
        """Initialize."""
        if isinstance(seed, bool) or not isinstance(seed, (int, np.integer)):
            raise ParameterError(f"seed must be an integer, got {seed!r}")
        if not 0 <= int(seed) < _MAX_SEED:
            raise ParameterError(f"seed must be an unsigned 64-bit integer, got {seed!r}")
        if isinstance(stream_index, bool) or not isinstance(stream_index, (int, np.integer)):
            raise ParameterError(f"stream_index must be an integer, got {stream_index!r}")
        if int(stream_index) < 0:
            raise ParameterError(f"stream_index must be non-negative, got {stream_index!r}")

        self.seed: int = int(seed)
        self.stream_index: int = int(stream_index)
        seed_sequence = np.random.SeedSequence(self.seed, spawn_key=(self.stream_index,))
        self._generator = np.random.Generator(np.random.Philox(seed_sequence))

    def uniform(self, size: Optional[int] = None) -> Union[float, np.ndarray]:
        """Draw from U[0, 1)."""
        return self._generator.random(size)

    def normal(
        self, mean: Union[float, np.ndarray], sigma: float, size: Optional[int] = None
    ) -> Union[float, np.ndarray]:
        """Draw from N(mean, sigma^2)."""
        return self._generator.normal(mean, sigma, size)

    def __repr__(self) -> str:
        return f"RngStream(seed={self.seed}, stream_index={self.stream_index})"
