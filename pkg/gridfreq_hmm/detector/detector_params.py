"""Gaussian detector parameters."""

import math
from typing import Sequence

import numpy as np

from ..const import USER_TOLERANCE
from ..exceptions import ParameterError


class DetectorParams:
    """State means, measurement noise and priors of the three-hypothesis test.

    Means are stored pre-combined; use :meth:`from_nominal` for the
    ``(f0, delta_f_min, delta_f_max)`` form.
    """

    def __init__(
        self,
        m_neg: float,
        m_zero: float,
        m_pos: float,
        sigma: float,
        priors: Sequence[float] = (1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0),
    ):
        """Initialize."""
        means = (float(m_neg), float(m_zero), float(m_pos))
        if not all(math.isfinite(mean) for mean in means):
            raise ParameterError(f"means must be finite, got {means}")
        if not means[0] < means[1] < means[2]:
            raise ParameterError(f"means must satisfy m_neg < m_zero < m_pos, got {means}")

        sigma = float(sigma)
        if not math.isfinite(sigma) or sigma <= 0.0:
            raise ParameterError(f"sigma must be positive, got {sigma!r}")

        prior_values = tuple(float(p) for p in priors)
        if len(prior_values) != 3:
            raise ParameterError(f"priors must have 3 entries, got {len(prior_values)}")
        if not all(math.isfinite(p) and p > 0.0 for p in prior_values):
            raise ParameterError(f"priors must be strictly positive, got {prior_values}")
        if abs(sum(prior_values) - 1.0) > USER_TOLERANCE:
            raise ParameterError(f"priors must sum to 1, got sum {sum(prior_values)!r}")

        self.m_neg: float = means[0]
        """Mean measurement (Hz) under a negative deviation."""

        self.m_zero: float = means[1]
        """Mean measurement (Hz) with no deviation."""

        self.m_pos: float = means[2]
        """Mean measurement (Hz) under a positive deviation."""

        self.sigma: float = sigma
        """Measurement noise standard deviation (Hz)."""

        self.priors: tuple[float, float, float] = prior_values
        """Prior probabilities (pi(-1), pi(0), pi(1)); also the initial distribution."""

    @classmethod
    def from_nominal(
        cls,
        f0: float,
        delta_f_min: float,
        delta_f_max: float,
        sigma: float,
        priors: Sequence[float] = (1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0),
    ) -> "DetectorParams":
        """Create instance from the nominal frequency and the extreme deviations."""
        return cls(f0 - delta_f_min, f0, f0 + delta_f_max, sigma, priors)

    @property
    def means(self) -> np.ndarray:
        """Means in state order (-1, 0, +1)."""
        return np.array([self.m_neg, self.m_zero, self.m_pos])

    def with_sigma(self, sigma: float) -> "DetectorParams":
        """Copy with a different noise level."""
        return DetectorParams(self.m_neg, self.m_zero, self.m_pos, sigma, self.priors)

    def with_priors(self, priors: Sequence[float]) -> "DetectorParams":
        """Copy with different priors."""
        return DetectorParams(self.m_neg, self.m_zero, self.m_pos, self.sigma, priors)

    def to_dict(self):
        return {
            "m_neg": self.m_neg,
            "m_zero": self.m_zero,
            "m_pos": self.m_pos,
            "sigma": self.sigma,
            "priors": list(self.priors),
        }

    def __repr__(self) -> str:
        return (
            f"DetectorParams(m=({self.m_neg}, {self.m_zero}, {self.m_pos}), "
            f"sigma={self.sigma}, priors={self.priors})"
        )
