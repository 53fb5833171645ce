"""Synthetic experiments: sequence generation, sweeps and Monte Carlo."""

from .accuracy import accuracy, expected_ht_accuracy, matches
from .detection_sweep import SweepRow, detection_sweep, sigma_to_snr_db, snr_db_to_sigma
from .emission_estimation import estimate_emission_matrix
from .monte_carlo import MonteCarloProgress, MonteCarloRunner, run_monte_carlo
from .monte_carlo_summary import MonteCarloSummary
from .sequence_generation import emit_symbols, simulate_states, synthesize_measurements
from .trial_result import TrialResult

__all__ = [
    "accuracy",
    "detection_sweep",
    "emit_symbols",
    "estimate_emission_matrix",
    "expected_ht_accuracy",
    "matches",
    "MonteCarloProgress",
    "MonteCarloRunner",
    "MonteCarloSummary",
    "run_monte_carlo",
    "sigma_to_snr_db",
    "simulate_states",
    "snr_db_to_sigma",
    "SweepRow",
    "synthesize_measurements",
    "TrialResult",
]
