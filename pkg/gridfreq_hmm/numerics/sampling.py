"""Gaussian and categorical draws."""

import math
from typing import Sequence

import numpy as np

from ..const import USER_TOLERANCE
from ..exceptions import ParameterError
from .rng_stream import RngStream


def sample_gaussian(mean: float, sigma: float, rng: RngStream) -> float:
    """Draw one value from N(mean, sigma^2)."""
    if not math.isfinite(mean):
        raise ParameterError(f"mean must be finite, got {mean!r}")
    if not sigma > 0.0 or not math.isfinite(sigma):
        raise ParameterError(f"sigma must be positive, got {sigma!r}")
    return float(rng.normal(mean, sigma))


def check_weights(weights: Sequence[float], name: str = "weights") -> np.ndarray:
    """Validate a probability vector and return it as an array."""
    values = np.asarray(weights, dtype=float)
    if values.ndim != 1 or values.size == 0:
        raise ParameterError(f"{name} must be a non-empty vector")
    if not np.all(np.isfinite(values)):
        raise ParameterError(f"{name} must be finite, got {values.tolist()}")
    if np.any(values < 0.0):
        raise ParameterError(f"{name} must be non-negative, got {values.tolist()}")
    total = float(values.sum())
    if abs(total - 1.0) > USER_TOLERANCE:
        raise ParameterError(f"{name} must sum to 1, got sum {total!r}")
    return values


def cumulative_cut_points(weights: np.ndarray) -> np.ndarray:
    """Cut points on [0, 1) for inverse-CDF categorical draws.

    Cumulative sums are divided by the total, so a zero-weight trailing category
    gets a cut point of exactly 1.0 and is never drawn. Only the first ``n - 1``
    cut points are kept: a uniform past all of them selects the last category.
    """
    cumulative = np.cumsum(weights, axis=0)
    return (cumulative / cumulative[-1])[:-1]


def categorical_indices(cut_points: np.ndarray, uniforms: np.ndarray) -> np.ndarray:
    """Map uniforms to category indices given per-draw cut points.

    ``cut_points`` has shape ``(n - 1,)`` or ``(len(uniforms), n - 1)``.
    """
    return np.sum(np.asarray(uniforms)[:, None] >= np.atleast_2d(cut_points), axis=1)


def sample_categorical(weights: Sequence[float], rng: RngStream) -> int:
    """Draw index ``i`` with probability ``weights[i]``."""
    values = check_weights(weights)
    cut_points = cumulative_cut_points(values)
    return int(np.sum(rng.uniform() >= cut_points))
