"""Emission matrix implied by the Gaussian ML detector."""

from ..const import INTERNAL_TOLERANCE
from ..detector.detector_params import DetectorParams
from ..detector.ml_detector import compute_thresholds
from ..exceptions import ModelValidationError
from ..logger import LOGGER
from ..numerics import q_function
from ..numerics.q_function import interval_probability
from .stochastic_matrix import EmissionMatrix
from .violation import check_matrix


def build_emission_matrix(params: DetectorParams) -> EmissionMatrix:
    """Closed-form R: each column is the decision distribution for one true state.

    r[-1, j] = 1 - Q((d1 - m_j) / sigma)
    r[ 0, j] = Q((d1 - m_j) / sigma) - Q((d2 - m_j) / sigma)
    r[+1, j] = Q((d2 - m_j) / sigma)
    """
    # Raises DegenerateThresholdsError for inverted boundaries.
    thresholds = compute_thresholds(params)
    rows: list[list[float]] = [[], [], []]
    for mean in params.means:
        lower = (thresholds.delta_neg_zero - mean) / params.sigma
        upper = (thresholds.delta_zero_pos - mean) / params.sigma
        rows[0].append(float(q_function(-lower)))
        rows[1].append(float(interval_probability(lower, upper)))
        rows[2].append(float(q_function(upper)))

    emissions = EmissionMatrix(rows)

    violations = check_matrix(emissions, INTERNAL_TOLERANCE)
    if violations:
        raise ModelValidationError(violations[0])

    LOGGER.debug("Built emission matrix %s", emissions.to_list())
    return emissions
