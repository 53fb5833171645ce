"""Scalar Gaussian machinery and seeded sampling."""

from .probability import Probability
from .q_function import q_function
from .rng_stream import RngStream
from .sampling import sample_categorical, sample_gaussian

__all__ = [
    "Probability",
    "q_function",
    "RngStream",
    "sample_categorical",
    "sample_gaussian",
]
