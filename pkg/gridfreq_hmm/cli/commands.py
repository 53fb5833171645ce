"""Subcommands wiring the library into tables and summary lines."""

import logging
import math
from collections.abc import Callable
from typing import Any, Optional

import numpy as np
import pandas as pd

from ..const import PUBLISHED_ACCURACY_PERCENT, PUBLISHED_MIN_GAIN_PERCENT
from ..detector.ml_detector import classify_many, compute_thresholds
from ..exceptions import ParameterError
from ..numerics import RngStream
from ..prediction.predictor import predict_series
from ..simulation.detection_sweep import STATUS_DEGENERATE, detection_sweep
from ..simulation.monte_carlo import MonteCarloProgress, MonteCarloRunner
from ..simulation.sequence_generation import simulate_states, synthesize_measurements
from ..viterbi.decoder import viterbi_decode
from ..viterbi.symbol_sequence import SymbolSequence
from . import output
from .measurements import load_measurements
from .run_config import RunConfig

_LOGGER = logging.getLogger(__name__)


class CommandResult:
    """Table for the output stream plus the key=value summary for the log."""

    def __init__(self, frame: pd.DataFrame, summary: dict[str, Any]):
        self.frame = frame
        self.summary = summary

    def summary_line(self) -> str:
        return " ".join(f"{key}={_format_value(value)}" for key, value in self.summary.items())


def _format_value(value: Any) -> str:
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)


def _require_input(command: str, input_path: Optional[str]) -> str:
    if input_path is None:
        raise ParameterError(f"The {command} command needs a measurement CSV (--input)")
    return input_path


def _symbol_counts(symbols: SymbolSequence) -> dict[str, int]:
    counts = np.bincount(symbols.indices, minlength=3)
    return {"count_neg": int(counts[0]), "count_zero": int(counts[1]), "count_pos": int(counts[2])}


def run_emission(config: RunConfig, input_path: Optional[str] = None) -> CommandResult:
    thresholds = compute_thresholds(config.params)
    emissions = config.emission_matrix()
    source = "explicit" if config.emissions is not None else config.emission_source.value
    return CommandResult(
        output.emission_frame(emissions),
        {
            "command": "emission",
            "source": source,
            "delta_neg_zero": thresholds.delta_neg_zero,
            "delta_zero_pos": thresholds.delta_zero_pos,
        },
    )


def run_detect(config: RunConfig, input_path: Optional[str] = None) -> CommandResult:
    series = load_measurements(_require_input("detect", input_path))
    thresholds = compute_thresholds(config.params)
    emitted = SymbolSequence.from_indices(classify_many(series.frequencies, thresholds))
    return CommandResult(
        output.detection_frame(series, emitted),
        {"command": "detect", "records": len(series), **_symbol_counts(emitted)},
    )


def run_decode(config: RunConfig, input_path: Optional[str] = None) -> CommandResult:
    series = load_measurements(_require_input("decode", input_path))
    thresholds = compute_thresholds(config.params)
    emitted = SymbolSequence.from_indices(classify_many(series.frequencies, thresholds))
    decoded = viterbi_decode(emitted, config.build_model())
    changed = int(np.count_nonzero(emitted.indices != decoded.indices))
    return CommandResult(
        output.decode_frame(series, emitted, decoded),
        {"command": "decode", "records": len(series), "changed": changed},
    )


def run_simulate(config: RunConfig, input_path: Optional[str] = None) -> CommandResult:
    """Synthetic trace on stream 0 of the base seed: hidden path, measurements, decisions."""
    model = config.build_model()
    rng = RngStream(config.base_seed, 0)
    hidden = simulate_states(model, config.length, rng)
    measurements = synthesize_measurements(hidden, config.params, rng)
    emitted = SymbolSequence.from_indices(
        classify_many(measurements, compute_thresholds(config.params))
    )
    return CommandResult(
        output.simulation_frame(hidden, measurements, emitted),
        {
            "command": "simulate",
            "length": config.length,
            "base_seed": config.base_seed,
            "ht_accuracy": float(np.mean(emitted.indices == hidden.indices)),
        },
    )


def _log_progress(progress: MonteCarloProgress):
    _LOGGER.debug("Monte Carlo progress: %s", progress)


def _published_reference(sigma: float) -> Optional[tuple[float, float]]:
    for published_sigma, reference in PUBLISHED_ACCURACY_PERCENT.items():
        if math.isclose(sigma, published_sigma, rel_tol=1e-12):
            return reference
    return None


def run_montecarlo(config: RunConfig, input_path: Optional[str] = None) -> CommandResult:
    runner = MonteCarloRunner(
        config.build_model(),
        config.length,
        config.base_seed,
        config.symbol_source,
        config.params,
    )
    runner.add_progress_listener(_log_progress)
    summary = runner.run(config.trials, config.threads)

    report: dict[str, Any] = {
        "command": "montecarlo",
        "trials": summary.trials,
        "length": config.length,
        "symbol_source": config.symbol_source.value,
        "ht_mean": summary.ht_mean,
        "ht_std": summary.ht_std,
        "va_mean": summary.va_mean,
        "va_std": summary.va_std,
        "gain": summary.gain,
        "expected_ht": summary.expected_ht,
        "published_min_gain": PUBLISHED_MIN_GAIN_PERCENT,
    }
    reference = _published_reference(config.params.sigma)
    if reference is not None:
        report["published_ht_mean"], report["published_va_mean"] = reference
    # No thread count in the table: 1- and N-thread output must match byte for byte.
    return CommandResult(output.monte_carlo_frame(summary), report)


def run_sweep(config: RunConfig, input_path: Optional[str] = None) -> CommandResult:
    rows = detection_sweep(config.params, snr_grid_db=config.snr_db, sigma_grid=config.sigmas)
    degenerate = sum(1 for row in rows if row.status == STATUS_DEGENERATE)
    return CommandResult(
        output.sweep_frame(rows),
        {"command": "sweep", "points": len(rows), "degenerate": degenerate},
    )


def run_predict(config: RunConfig, input_path: Optional[str] = None) -> CommandResult:
    if config.predict_from is not None:
        start = np.zeros(3)
        start[config.predict_from.index] = 1.0
        origin = str(config.predict_from.value)
    else:
        start = np.asarray(config.params.priors)
        origin = "priors"
    series = predict_series(config.transitions, start, config.horizon)
    return CommandResult(
        output.prediction_frame(series),
        {
            "command": "predict",
            "horizon": config.horizon,
            "from": origin,
            "most_likely": series[-1].most_likely().value,
        },
    )


COMMANDS: dict[str, Callable[[RunConfig, Optional[str]], CommandResult]] = {
    "emission": run_emission,
    "detect": run_detect,
    "decode": run_decode,
    "simulate": run_simulate,
    "montecarlo": run_montecarlo,
    "sweep": run_sweep,
    "predict": run_predict,
}
