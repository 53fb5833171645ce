"""Three-hypothesis Gaussian ML detector."""

from .detector_params import DetectorParams
from .ml_detector import (
    classify,
    classify_many,
    compute_thresholds,
    detection_probabilities,
    error_probabilities,
)
from .state_symbol import STATE_ORDER, StateSymbol
from .thresholds import Thresholds

__all__ = [
    "classify",
    "classify_many",
    "compute_thresholds",
    "detection_probabilities",
    "DetectorParams",
    "error_probabilities",
    "STATE_ORDER",
    "StateSymbol",
    "Thresholds",
]
