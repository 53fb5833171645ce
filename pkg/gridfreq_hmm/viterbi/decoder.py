"""Viterbi maximum-likelihood sequence estimation."""

from typing import Iterable, Union

from ..hmm.hmm_model import HmmModel
from ..hmm.validation import require_valid
from .symbol_sequence import SymbolLike, SymbolSequence
from .trellis import build_trellis


def viterbi_decode(
    x: Union[SymbolSequence, Iterable[SymbolLike]], model: HmmModel
) -> SymbolSequence:
    """Most likely hidden path given the emitted symbols ``x``.

    Ties go to the lexicographically smallest path under -1 < 0 < +1.
    Runs in O(9 K) time and O(3 K) space.
    """
    if not isinstance(x, SymbolSequence):
        # Raises ParameterError for an empty sequence.
        x = SymbolSequence(x)
    require_valid(model)
    return build_trellis(x, model).backtrack()
