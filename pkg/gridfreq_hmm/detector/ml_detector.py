"""Three-hypothesis Gaussian maximum-likelihood test.

Regions are left-closed: ``z`` exactly on ``delta_neg_zero`` decides 0 and
exactly on ``delta_zero_pos`` decides +1.
"""

import math

import numpy as np

from ..exceptions import DomainError, ParameterError
from ..logger import LOGGER
from ..numerics import Probability, q_function
from ..numerics.q_function import interval_probability
from .detector_params import DetectorParams
from .state_symbol import StateSymbol
from .thresholds import Thresholds


def compute_thresholds(params: DetectorParams) -> Thresholds:
    """Prior-adjusted boundaries between neighbouring state means."""
    pi_neg, pi_zero, pi_pos = params.priors
    variance = params.sigma**2

    eta_neg_zero = math.log(pi_neg / pi_zero)
    eta_zero_pos = math.log(pi_zero / pi_pos)

    delta_neg_zero = (params.m_neg + params.m_zero) / 2.0 + eta_neg_zero * variance / (
        params.m_zero - params.m_neg
    )
    delta_zero_pos = (params.m_zero + params.m_pos) / 2.0 + eta_zero_pos * variance / (
        params.m_pos - params.m_zero
    )

    thresholds = Thresholds(delta_neg_zero, delta_zero_pos)
    LOGGER.debug("Computed thresholds %s for %r", thresholds, params)
    return thresholds


def classify(z: float, thresholds: Thresholds) -> StateSymbol:
    """Decide the deviation state for one measurement."""
    z = float(z)
    if not math.isfinite(z):
        raise DomainError("z", z)
    if z < thresholds.delta_neg_zero:
        return StateSymbol.NEGATIVE
    if z < thresholds.delta_zero_pos:
        return StateSymbol.ZERO
    return StateSymbol.POSITIVE


def classify_many(z, thresholds: Thresholds) -> np.ndarray:
    """Decide the state index (0, 1, 2 for -1, 0, +1) for every measurement."""
    values = np.asarray(z, dtype=float)
    if not np.all(np.isfinite(values)):
        bad = int(np.flatnonzero(~np.isfinite(values))[0])
        raise DomainError(f"z[{bad}]", float(values[bad]))
    return np.searchsorted(np.array(thresholds.as_tuple()), values, side="right")


def _standardized(threshold: float, mean: float, sigma: float) -> float:
    return (threshold - mean) / sigma


def error_probabilities(
    params: DetectorParams, thresholds: Thresholds
) -> tuple[Probability, Probability, Probability]:
    """Probability of deciding a wrong state, given each true state (-1, 0, +1)."""
    if not isinstance(params, DetectorParams) or not isinstance(thresholds, Thresholds):
        raise ParameterError("error_probabilities needs DetectorParams and Thresholds")
    sigma = params.sigma
    lower_neg = _standardized(thresholds.delta_neg_zero, params.m_neg, sigma)
    lower_zero = _standardized(thresholds.delta_neg_zero, params.m_zero, sigma)
    upper_zero = _standardized(thresholds.delta_zero_pos, params.m_zero, sigma)
    upper_pos = _standardized(thresholds.delta_zero_pos, params.m_pos, sigma)

    p_e_neg = q_function(lower_neg)
    p_e_zero = interval_probability(lower_zero, upper_zero).complement()
    # 1 - Q(u) == Q(-u), without the cancellation.
    p_e_pos = q_function(-upper_pos)
    return (p_e_neg, p_e_zero, p_e_pos)


def detection_probabilities(
    params: DetectorParams, thresholds: Thresholds
) -> tuple[Probability, Probability, Probability]:
    """Probability of deciding the true state, for each true state (-1, 0, +1)."""
    return tuple(p.complement() for p in error_probabilities(params, thresholds))
