"""Trial Result."""

from ..exceptions import ParameterError
from ..viterbi.symbol_sequence import SymbolSequence
from .accuracy import matches


class TrialResult:
    """One Monte Carlo trial: hidden path, emitted symbols and Viterbi estimate."""

    def __init__(self, hidden: SymbolSequence, emitted: SymbolSequence, decoded: SymbolSequence):
        """Initialize."""
        if not len(hidden) == len(emitted) == len(decoded):
            raise ParameterError(
                f"Trial sequences differ in length: {len(hidden)}, {len(emitted)}, {len(decoded)}"
            )
        self.hidden = hidden
        self.emitted = emitted
        self.decoded = decoded
        self.ht_matches = matches(emitted, hidden)
        self.va_matches = matches(decoded, hidden)

    @property
    def length(self) -> int:
        return len(self.hidden)

    @property
    def ht_accuracy(self) -> float:
        """Hypothesis-test accuracy, #{k : x[k] = s[k]} / K."""
        return self.ht_matches / self.length

    @property
    def va_accuracy(self) -> float:
        """Viterbi accuracy, #{k : s*[k] = s[k]} / K."""
        return self.va_matches / self.length

    def __str__(self) -> str:
        return f"HT[{self.ht_accuracy:.2%}] VA[{self.va_accuracy:.2%}] K[{self.length}]"
