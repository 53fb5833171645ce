"""Long-run state occupancy of the hidden chain."""

import numpy as np

from ..const import STATIONARY_MAX_ITERATIONS, STATIONARY_TOLERANCE, USER_TOLERANCE
from ..exceptions import ModelValidationError, StructuralError
from ..logger import LOGGER
from .stochastic_matrix import TransitionMatrix
from .violation import check_matrix


def is_primitive(transitions: TransitionMatrix) -> bool:
    """True when some power of P is strictly positive (irreducible and aperiodic).

    For an n-state chain it suffices to test the power (n - 1)^2 + 1.
    """
    structure = (transitions.values > 0.0).astype(float)
    n = structure.shape[0]
    return bool(np.all(np.linalg.matrix_power(structure, (n - 1) ** 2 + 1) > 0.0))


def stationary_distribution(transitions: TransitionMatrix) -> np.ndarray:
    """Row vector pi with pi P = pi, found by power iteration."""
    violations = check_matrix(transitions, USER_TOLERANCE)
    if violations:
        raise ModelValidationError(violations[0])
    if not is_primitive(transitions):
        raise StructuralError("Transition matrix is reducible or periodic")

    matrix = transitions.values
    current = np.zeros(matrix.shape[0])
    current[0] = 1.0
    for iteration in range(1, STATIONARY_MAX_ITERATIONS + 1):
        following = current @ matrix
        if np.max(np.abs(following - current)) <= STATIONARY_TOLERANCE:
            LOGGER.debug("Stationary distribution converged after %d iterations", iteration)
            return following / following.sum()
        current = following

    raise StructuralError(
        f"Power iteration did not converge within {STATIONARY_MAX_ITERATIONS} iterations"
    )
