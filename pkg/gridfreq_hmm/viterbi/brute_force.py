"""Exhaustive maximum-likelihood sequence search (oracle for the decoder)."""

import itertools

import numpy as np

from ..const import BRUTE_FORCE_MAX_LENGTH
from ..exceptions import InfeasibleObservationError, SequenceTooLongError
from ..hmm.hmm_model import HmmModel
from ..hmm.validation import require_valid
from .symbol_sequence import SymbolSequence


def brute_force_mlse(x: SymbolSequence, model: HmmModel) -> SymbolSequence:
    """Score all 3^K paths and return the lexicographically smallest maximizer.

    Scores are folded step by step as ``(score + log p) + log r``, the order the
    trellis uses, so tied paths compare equal as floats.
    """
    length = len(x)
    if length > BRUTE_FORCE_MAX_LENGTH:
        raise SequenceTooLongError(length, BRUTE_FORCE_MAX_LENGTH)
    require_valid(model)

    # itertools.product enumerates in lexicographic order of the state indices.
    candidates = np.array(list(itertools.product(range(3), repeat=length)), dtype=np.int64)
    log_p = model.transitions.log_values
    log_r = model.emissions.log_values
    symbols = x.indices

    scores = model.log_initial[candidates[:, 0]] + log_r[symbols[0], candidates[:, 0]]
    for k in range(length):
        if k > 0:
            scores = scores + log_p[candidates[:, k - 1], candidates[:, k]]
            scores = scores + log_r[symbols[k], candidates[:, k]]
        if np.all(np.isneginf(scores)):
            raise InfeasibleObservationError(k + 1)

    winner = int(np.argmax(scores == np.max(scores)))
    return SymbolSequence.from_indices(candidates[winner])
