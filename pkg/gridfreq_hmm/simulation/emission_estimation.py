"""Emission matrix estimated by classifying synthetic measurements."""

import numpy as np

from ..detector.detector_params import DetectorParams
from ..detector.ml_detector import classify_many, compute_thresholds
from ..exceptions import ParameterError
from ..hmm.stochastic_matrix import EmissionMatrix
from ..logger import LOGGER
from ..numerics import RngStream


def estimate_emission_matrix(
    params: DetectorParams, samples_per_state: int, rng: RngStream
) -> EmissionMatrix:
    """Column j holds the decision frequencies of n measurements drawn under state j."""
    if isinstance(samples_per_state, bool) or int(samples_per_state) != samples_per_state:
        raise ParameterError(f"samples_per_state must be an integer, got {samples_per_state!r}")
    if samples_per_state < 1:
        raise ParameterError(f"samples_per_state must be positive, got {samples_per_state!r}")
    n = int(samples_per_state)

    thresholds = compute_thresholds(params)
    columns = []
    for mean in params.means:
        decisions = classify_many(rng.normal(mean, params.sigma, n), thresholds)
        columns.append(np.bincount(decisions, minlength=3) / n)

    emissions = EmissionMatrix(np.column_stack(columns))
    LOGGER.debug("Estimated emission matrix from %d samples per state: %s", n, emissions.to_list())
    return emissions
