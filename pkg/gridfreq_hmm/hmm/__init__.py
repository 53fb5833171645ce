"""HMM parameter objects."""

from .emission_builder import build_emission_matrix
from .hmm_model import HmmModel
from .stationary import is_primitive, stationary_distribution
from .stochastic_matrix import EmissionMatrix, StochasticMatrix, TransitionMatrix
from .validation import ValidationReport, require_valid, validate
from .violation import Violation

__all__ = [
    "build_emission_matrix",
    "EmissionMatrix",
    "HmmModel",
    "is_primitive",
    "require_valid",
    "stationary_distribution",
    "StochasticMatrix",
    "TransitionMatrix",
    "validate",
    "ValidationReport",
    "Violation",
]
