"""Accuracy of an estimated state path."""

import numpy as np

from ..exceptions import ParameterError
from ..hmm.hmm_model import HmmModel
from ..prediction.predictor import predict_series
from ..viterbi.symbol_sequence import SymbolSequence


def matches(estimate: SymbolSequence, truth: SymbolSequence) -> int:
    """Number of positions where the estimate equals the truth."""
    if len(estimate) != len(truth):
        raise ParameterError(
            f"Sequence lengths differ: estimate has {len(estimate)}, truth has {len(truth)}"
        )
    return int(np.count_nonzero(estimate.indices == truth.indices))


def accuracy(estimate: SymbolSequence, truth: SymbolSequence) -> float:
    """Fraction of matching positions, #{k : estimate[k] = truth[k]} / K."""
    return matches(estimate, truth) / len(truth)


def expected_ht_accuracy(model: HmmModel, length: int) -> float:
    """Expected per-trial hypothesis-test accuracy over a length-K chain.

    sum_j w_j r[j, j], where w is the marginal state occupancy averaged over
    steps 1..K, propagated from Pi0 rather than assumed stationary.
    """
    series = predict_series(model.transitions, model.initial, length - 1)
    occupancy = np.mean([vector.probs for vector in series], axis=0)
    return float(occupancy @ np.diag(model.emissions.values))
