"""Synthetic hidden paths, emitted symbols and measurements."""

import numpy as np

from ..detector.detector_params import DetectorParams
from ..exceptions import ModelValidationError, ParameterError
from ..hmm.hmm_model import HmmModel
from ..hmm.stochastic_matrix import EmissionMatrix
from ..hmm.validation import require_valid
from ..hmm.violation import check_matrix
from ..numerics import RngStream
from ..numerics.sampling import categorical_indices, cumulative_cut_points
from ..viterbi.symbol_sequence import SymbolSequence


def simulate_states(model: HmmModel, length: int, rng: RngStream) -> SymbolSequence:
    """Draw s_1 ~ Pi0, then s_k from row s_{k-1} of P."""
    if isinstance(length, bool) or int(length) != length or length < 1:
        raise ParameterError(f"length must be a positive integer, got {length!r}")
    require_valid(model)

    uniforms = rng.uniform(int(length))
    start_cuts = cumulative_cut_points(model.initial).tolist()
    row_cuts = cumulative_cut_points(model.transitions.values.T).T.tolist()

    states = np.empty(int(length), dtype=np.int64)
    state = sum(uniforms[0] >= cut for cut in start_cuts)
    states[0] = state
    for k in range(1, int(length)):
        u = uniforms[k]
        state = sum(u >= cut for cut in row_cuts[state])
        states[k] = state
    return SymbolSequence.from_indices(states)


def emit_symbols(
    hidden: SymbolSequence, emissions: EmissionMatrix, rng: RngStream
) -> SymbolSequence:
    """Draw x_k independently from column s_k of R."""
    if not isinstance(emissions, EmissionMatrix):
        emissions = EmissionMatrix(emissions)
    violations = check_matrix(emissions)
    if violations:
        raise ModelValidationError(violations[0])

    # Column j's cut points, gathered once per step.
    cut_points = cumulative_cut_points(emissions.values)
    uniforms = rng.uniform(len(hidden))
    return SymbolSequence.from_indices(
        categorical_indices(cut_points[:, hidden.indices].T, uniforms)
    )


def synthesize_measurements(
    hidden: SymbolSequence, params: DetectorParams, rng: RngStream
) -> np.ndarray:
    """Draw z_k ~ N(m_{s_k}, sigma^2) independently (Hz)."""
    return np.asarray(rng.normal(params.means[hidden.indices], params.sigma, len(hidden)))
