"""Monte Carlo Summary."""

from typing import Optional

import numpy as np

from ..const import HISTOGRAM_BINS
from ..exceptions import ParameterError


class MonteCarloSummary:
    """Accuracy statistics (percent) of HT and VA over all trials.

    Histograms have one left-closed bin [i, i + 1) per percentage point
    i = 0..100; a trial with 100 % accuracy lands in the last bin.
    """

    def __init__(
        self,
        trials: int,
        ht_mean: float,
        ht_std: float,
        va_mean: float,
        va_std: float,
        histogram_ht: np.ndarray,
        histogram_va: np.ndarray,
        expected_ht: Optional[float] = None,
    ):
        """Initialize."""
        self.trials = trials
        self.ht_mean = ht_mean
        self.ht_std = ht_std
        self.va_mean = va_mean
        self.va_std = va_std
        self.histogram_ht = histogram_ht
        self.histogram_va = histogram_va
        self.expected_ht = expected_ht
        """Analytic HT mean in percent, when the model was known."""

    @classmethod
    def from_matches(
        cls,
        ht_matches: np.ndarray,
        va_matches: np.ndarray,
        length: int,
        expected_ht: Optional[float] = None,
    ) -> "MonteCarloSummary":
        """Create instance from per-trial match counts, reduced in trial order."""
        ht_matches = np.asarray(ht_matches, dtype=np.int64)
        va_matches = np.asarray(va_matches, dtype=np.int64)
        if ht_matches.size == 0 or ht_matches.shape != va_matches.shape:
            raise ParameterError("Need one HT and one VA match count per trial")

        ht_percent = ht_matches * 100.0 / length
        va_percent = va_matches * 100.0 / length
        return cls(
            trials=int(ht_matches.size),
            ht_mean=float(np.mean(ht_percent)),
            ht_std=float(np.std(ht_percent)),
            va_mean=float(np.mean(va_percent)),
            va_std=float(np.std(va_percent)),
            histogram_ht=_histogram(ht_matches, length),
            histogram_va=_histogram(va_matches, length),
            expected_ht=expected_ht,
        )

    @property
    def gain(self) -> float:
        """VA mean minus HT mean, in percentage points."""
        return self.va_mean - self.ht_mean

    def __str__(self) -> str:
        return (
            f"trials={self.trials} ht_mean={self.ht_mean:.4f} ht_std={self.ht_std:.4f} "
            f"va_mean={self.va_mean:.4f} va_std={self.va_std:.4f} gain={self.gain:.4f}"
        )


def _histogram(match_counts: np.ndarray, length: int) -> np.ndarray:
    # Integer bin index: floor(100 * matches / K) without float rounding.
    bins = (match_counts * 100) // length
    return np.bincount(bins, minlength=HISTOGRAM_BINS)
