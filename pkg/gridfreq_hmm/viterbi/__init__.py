"""Maximum-likelihood hidden sequence estimation."""

from .brute_force import brute_force_mlse
from .decoder import viterbi_decode
from .joint_probability import joint_log_prob
from .symbol_sequence import SymbolSequence
from .trellis import Trellis, build_trellis

__all__ = [
    "brute_force_mlse",
    "build_trellis",
    "joint_log_prob",
    "SymbolSequence",
    "Trellis",
    "viterbi_decode",
]
