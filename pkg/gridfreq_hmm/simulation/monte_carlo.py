"""Monte Carlo comparison of hypothesis-test and Viterbi accuracy."""

from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor
from typing import Optional

import numpy as np

from ..const import MONTE_CARLO_BATCH_SIZE, SymbolSource
from ..detector.detector_params import DetectorParams
from ..detector.ml_detector import classify_many, compute_thresholds
from ..exceptions import ParameterError
from ..hmm.hmm_model import HmmModel
from ..hmm.stochastic_matrix import EmissionMatrix, TransitionMatrix
from ..hmm.validation import require_valid
from ..logger import LOGGER
from ..numerics import RngStream
from ..viterbi.decoder import viterbi_decode
from ..viterbi.symbol_sequence import SymbolSequence
from .accuracy import expected_ht_accuracy
from .monte_carlo_summary import MonteCarloSummary
from .sequence_generation import emit_symbols, simulate_states, synthesize_measurements
from .trial_result import TrialResult


class MonteCarloProgress:
    """Completed and total trial counts, published after every batch."""

    def __init__(self, completed: int, total: int):
        self.completed = completed
        self.total = total

    @property
    def fraction(self) -> float:
        return self.completed / self.total

    def __str__(self) -> str:
        return f"Completed [{self.completed}/{self.total}]"


class MonteCarloRunner:
    """Runs independent trials, each on its own ``RngStream(base_seed, t)``.

    Per-trial match counts are stored by trial index and reduced in index order,
    so the summary does not depend on how trials were spread across threads.
    """

    def __init__(
        self,
        model: HmmModel,
        length: int,
        base_seed: int = 0,
        symbol_source: SymbolSource = SymbolSource.EMISSION,
        params: Optional[DetectorParams] = None,
    ):
        """Initialize."""
        if isinstance(length, bool) or int(length) != length or length < 1:
            raise ParameterError(f"length must be a positive integer, got {length!r}")
        symbol_source = SymbolSource(symbol_source)
        if symbol_source == SymbolSource.MEASUREMENT and params is None:
            raise ParameterError("The measurement symbol source needs detector parameters")
        require_valid(model)
        # Fail on a bad seed here rather than inside a worker.
        RngStream(base_seed)

        self.model = model
        self.length = int(length)
        self.base_seed = int(base_seed)
        self.symbol_source = symbol_source
        self.params = params
        self.thresholds = compute_thresholds(params) if params is not None else None
        self.listeners: list[Callable[[MonteCarloProgress], None]] = []

    def add_progress_listener(self, listener: Callable[[MonteCarloProgress], None]):
        self.listeners.append(listener)

    def publish_progress(self, progress: MonteCarloProgress):
        for listener in self.listeners:
            listener(progress)

    def emitted_symbols(self, hidden: SymbolSequence, rng: RngStream) -> SymbolSequence:
        if self.symbol_source == SymbolSource.EMISSION:
            return emit_symbols(hidden, self.model.emissions, rng)
        measurements = synthesize_measurements(hidden, self.params, rng)
        return SymbolSequence.from_indices(classify_many(measurements, self.thresholds))

    def run_trial(self, trial: int) -> TrialResult:
        """simulate_states -> emitted symbols -> viterbi_decode on stream ``trial``."""
        rng = RngStream(self.base_seed, trial)
        hidden = simulate_states(self.model, self.length, rng)
        emitted = self.emitted_symbols(hidden, rng)
        decoded = viterbi_decode(emitted, self.model)
        return TrialResult(hidden, emitted, decoded)

    def run(self, trials: int, threads: int = 1) -> MonteCarloSummary:
        if isinstance(trials, bool) or int(trials) != trials or trials < 1:
            raise ParameterError(f"trials must be a positive integer, got {trials!r}")
        if isinstance(threads, bool) or int(threads) != threads or threads < 1:
            raise ParameterError(f"threads must be a positive integer, got {threads!r}")
        trials = int(trials)

        ht_matches = np.zeros(trials, dtype=np.int64)
        va_matches = np.zeros(trials, dtype=np.int64)

        def run_batch(batch: range) -> int:
            for trial in batch:
                result = self.run_trial(trial)
                ht_matches[trial] = result.ht_matches
                va_matches[trial] = result.va_matches
            return len(batch)

        batches = [
            range(start, min(start + MONTE_CARLO_BATCH_SIZE, trials))
            for start in range(0, trials, MONTE_CARLO_BATCH_SIZE)
        ]
        LOGGER.debug(
            "Running %d trials of length %d on %d thread(s), symbols from %s",
            trials,
            self.length,
            threads,
            self.symbol_source.value,
        )

        completed = 0
        with ThreadPoolExecutor(max_workers=int(threads)) as executor:
            for done in executor.map(run_batch, batches):
                completed += done
                self.publish_progress(MonteCarloProgress(completed, trials))

        expected = 100.0 * expected_ht_accuracy(self.model, self.length)
        return MonteCarloSummary.from_matches(ht_matches, va_matches, self.length, expected)


def run_monte_carlo(
    params: DetectorParams,
    transitions: TransitionMatrix,
    length: int,
    trials: int,
    base_seed: int = 0,
    threads: int = 1,
    symbol_source: SymbolSource = SymbolSource.EMISSION,
    emissions: Optional[EmissionMatrix] = None,
) -> MonteCarloSummary:
    """HT-vs-VA accuracy over ``trials`` independent length-K trials.

    R is built from ``params`` unless ``emissions`` is given; Pi0 is the priors.
    """
    model = HmmModel.from_params(params, transitions, emissions)
    runner = MonteCarloRunner(model, length, base_seed, symbol_source, params)
    summary = runner.run(trials, threads)
    LOGGER.debug("Monte Carlo finished: %s", summary)
    return summary
