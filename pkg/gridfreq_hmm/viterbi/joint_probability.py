"""Log joint probability of an observation and a state path."""

import numpy as np

from ..exceptions import ParameterError
from ..hmm.hmm_model import HmmModel
from .symbol_sequence import SymbolSequence


def joint_log_prob(x: SymbolSequence, s: SymbolSequence, model: HmmModel) -> float:
    """log[ Pi0(s_1) * prod_k r[x_k, s_k] * prod_{k>=2} p[s_{k-1}, s_k] ].

    Uses K emission factors and K - 1 transition factors; -inf when any factor is 0.
    """
    if len(x) != len(s):
        raise ParameterError(f"Sequence lengths differ: x has {len(x)}, s has {len(s)}")
    states = s.indices
    total = model.log_initial[states[0]]
    total += np.sum(model.emissions.log_values[x.indices, states])
    total += np.sum(model.transitions.log_values[states[:-1], states[1:]])
    return float(total)
