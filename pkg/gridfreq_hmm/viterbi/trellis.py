"""Forward trellis of partial-path log scores."""

from typing import Optional

import numpy as np

from ..detector.state_symbol import StateSymbol
from ..exceptions import InfeasibleObservationError
from ..hmm.hmm_model import HmmModel
from .symbol_sequence import SymbolSequence

NO_BACKPOINTER = -1


class Trellis:
    """K x 3 lattice of best partial-path log scores and their backpointers.

    ``log_scores[k, j]`` is the best log joint probability of the first ``k + 1``
    observations over paths ending in state ``j``. ``ranks[k]`` orders those
    best paths lexicographically, so backtracking yields the smallest optimal
    path under -1 < 0 < +1.
    """

    def __init__(self, log_scores: np.ndarray, backpointers: np.ndarray, ranks: np.ndarray):
        """Initialize."""
        self.log_scores = log_scores
        self.backpointers = backpointers
        self.ranks = ranks

    def __len__(self) -> int:
        return int(self.log_scores.shape[0])

    @property
    def best_log_score(self) -> float:
        return float(np.max(self.log_scores[-1]))

    def backpointer(self, k: int, state: StateSymbol) -> Optional[StateSymbol]:
        """Predecessor of ``state`` on its best path at step ``k`` (0-based); None at k = 0."""
        pointer = int(self.backpointers[k, state.index])
        return None if pointer == NO_BACKPOINTER else StateSymbol.from_index(pointer)

    def final_state(self) -> int:
        """Index of the last state of the lexicographically smallest optimal path."""
        last = self.log_scores[-1]
        tied = np.flatnonzero(last == np.max(last))
        return int(tied[np.argmin(self.ranks[-1, tied])])

    def backtrack(self) -> SymbolSequence:
        states = np.empty(len(self), dtype=np.int64)
        states[-1] = self.final_state()
        for k in range(len(self) - 1, 0, -1):
            states[k - 1] = self.backpointers[k, states[k]]
        return SymbolSequence.from_indices(states)


def _rank(keys: list[tuple[int, int]]) -> list[int]:
    order = sorted(range(len(keys)), key=keys.__getitem__)
    ranks = [0] * len(keys)
    for position, state in enumerate(order):
        ranks[state] = position
    return ranks


def build_trellis(x: SymbolSequence, model: HmmModel) -> Trellis:
    """Run the forward recursion over ``x``.

    log_scores[k, j] = max_i(log_scores[k-1, i] + log p[i, j]) + log r[x_k, j]

    Ties are exact: candidates must be equal as floats. The additions run in the
    same order as in brute_force_mlse.
    """
    log_p = model.transitions.log_values
    log_r = model.emissions.log_values
    symbols = x.indices
    length = len(x)

    log_scores = np.full((length, 3), -np.inf)
    backpointers = np.full((length, 3), NO_BACKPOINTER, dtype=np.int64)
    ranks = np.zeros((length, 3), dtype=np.int64)

    log_scores[0] = model.log_initial + log_r[symbols[0]]
    ranks[0] = (0, 1, 2)
    if np.all(np.isneginf(log_scores[0])):
        raise InfeasibleObservationError(1)

    for k in range(1, length):
        previous = log_scores[k - 1]
        previous_ranks = ranks[k - 1]
        emission = log_r[symbols[k]]
        keys = []
        for j in range(3):
            candidates = previous + log_p[:, j]
            best = np.max(candidates)
            if np.isneginf(best):
                pointer = int(np.argmin(previous_ranks))
            else:
                tied = np.flatnonzero(candidates == best)
                pointer = int(tied[np.argmin(previous_ranks[tied])])
                log_scores[k, j] = best + emission[j]
            backpointers[k, j] = pointer
            keys.append((int(previous_ranks[pointer]), j))
        ranks[k] = _rank(keys)
        if np.all(np.isneginf(log_scores[k])):
            raise InfeasibleObservationError(k + 1)

    return Trellis(log_scores, backpointers, ranks)
