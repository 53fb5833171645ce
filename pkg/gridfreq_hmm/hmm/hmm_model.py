"""The (P, R, Pi0) triple."""

from functools import cached_property
from typing import Optional, Sequence

import numpy as np

from ..detector.detector_params import DetectorParams
from ..exceptions import ParameterError
from .emission_builder import build_emission_matrix
from .stochastic_matrix import EmissionMatrix, TransitionMatrix


class HmmModel:
    """Hidden Markov model of the deviation state and the detector's decisions."""

    def __init__(
        self,
        transitions: TransitionMatrix,
        emissions: EmissionMatrix,
        initial: Sequence[float],
    ):
        """Initialize."""
        if not isinstance(transitions, TransitionMatrix):
            transitions = TransitionMatrix(transitions)
        if not isinstance(emissions, EmissionMatrix):
            emissions = EmissionMatrix(emissions)
        initial_array = np.array(initial, dtype=float)
        if initial_array.shape != (3,):
            raise ParameterError(f"initial must have 3 entries, got shape {initial_array.shape}")
        if not np.all(np.isfinite(initial_array)):
            raise ParameterError("initial entries must be finite")
        initial_array.flags.writeable = False

        self.transitions: TransitionMatrix = transitions
        self.emissions: EmissionMatrix = emissions
        self.initial: np.ndarray = initial_array

    @classmethod
    def from_params(
        cls,
        params: DetectorParams,
        transitions: TransitionMatrix,
        emissions: Optional[EmissionMatrix] = None,
    ) -> "HmmModel":
        """Create instance whose R comes from the detector (unless given) and Pi0 from its priors."""
        if emissions is None:
            emissions = build_emission_matrix(params)
        return cls(transitions, emissions, params.priors)

    @cached_property
    def log_initial(self) -> np.ndarray:
        with np.errstate(divide="ignore"):
            logs = np.log(self.initial)
        logs.flags.writeable = False
        return logs

    def __repr__(self) -> str:
        return (
            f"HmmModel(transitions={self.transitions.to_list()}, "
            f"emissions={self.emissions.to_list()}, initial={self.initial.tolist()})"
        )
