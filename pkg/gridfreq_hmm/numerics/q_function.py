"""Standard normal upper-tail probability."""

import math

from scipy.special import erfc

from ..exceptions import DomainError
from .probability import Probability

_SQRT2 = math.sqrt(2.0)


def q_function(x: float) -> Probability:
    """Return Q(x) = P(Z > x) for a standard normal Z.

    Evaluated as erfc(x / sqrt(2)) / 2, which keeps full relative precision far
    into both tails (absolute error well under 1e-12 for |x| <= 8).
    """
    x = float(x)
    if not math.isfinite(x):
        raise DomainError("x", x)
    return Probability.clipped(0.5 * float(erfc(x / _SQRT2)))


def interval_probability(lower: float, upper: float) -> Probability:
    """Return P(lower <= Z < upper) for a standard normal Z.

    Picks the tail on the side where both bounds lie so that neither difference
    cancels catastrophically.
    """
    if lower >= upper:
        return Probability(0.0)
    if lower >= 0.0:
        value = q_function(lower) - q_function(upper)
    elif upper <= 0.0:
        value = q_function(-upper) - q_function(-lower)
    else:
        value = 1.0 - q_function(upper) - q_function(-lower)
    return Probability.clipped(value)
