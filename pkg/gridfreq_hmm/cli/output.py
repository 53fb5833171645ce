"""CSV emission of command results."""

import contextlib
import sys
from typing import Iterator, Optional, TextIO

import numpy as np
import pandas as pd

from ..const import HISTOGRAM_BINS
from ..hmm.stochastic_matrix import EmissionMatrix
from ..prediction.prediction_vector import PredictionVector
from ..simulation.detection_sweep import SweepRow
from ..simulation.monte_carlo_summary import MonteCarloSummary
from ..viterbi.symbol_sequence import SymbolSequence
from .measurements import COLUMN_FREQUENCY, MeasurementSeries

STDOUT_NAMES = (None, "-", "stdout")

# 17 significant digits round-trip every double.
FLOAT_FORMAT = "%.17g"


@contextlib.contextmanager
def open_output(path: Optional[str]) -> Iterator[TextIO]:
    """Yield stdout for ``-``/``stdout``/None, otherwise the named file."""
    if path in STDOUT_NAMES:
        yield sys.stdout
        return
    with open(path, "w", encoding="utf-8", newline="") as stream:
        yield stream


def write_table(frame: pd.DataFrame, stream: TextIO):
    frame.to_csv(stream, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")


def emission_frame(emissions: EmissionMatrix) -> pd.DataFrame:
    """Rows of R: one per emitted symbol x, columns per true state."""
    values = emissions.values
    return pd.DataFrame(
        {
            "x": [-1, 0, 1],
            "s_neg": values[:, 0],
            "s_zero": values[:, 1],
            "s_pos": values[:, 2],
        }
    )


def detection_frame(series: MeasurementSeries, emitted: SymbolSequence) -> pd.DataFrame:
    return pd.DataFrame(
        {
            series.index_name: series.index_tokens,
            COLUMN_FREQUENCY: series.frequencies,
            "x": emitted.labels,
        }
    )


def decode_frame(
    series: MeasurementSeries, emitted: SymbolSequence, decoded: SymbolSequence
) -> pd.DataFrame:
    frame = detection_frame(series, emitted)
    frame["s_star"] = decoded.labels
    return frame


def simulation_frame(
    hidden: SymbolSequence, measurements: np.ndarray, emitted: SymbolSequence
) -> pd.DataFrame:
    return pd.DataFrame(
        {
            "k": np.arange(1, len(hidden) + 1),
            "s": hidden.labels,
            COLUMN_FREQUENCY: measurements,
            "x": emitted.labels,
        }
    )


def monte_carlo_frame(summary: MonteCarloSummary) -> pd.DataFrame:
    """Long table: trials, mean, std and expected rows, then one row per histogram bin."""
    records = ["trials", "mean", "std", "expected"] + ["bin"] * HISTOGRAM_BINS
    bin_percent = [np.nan] * 4 + list(range(HISTOGRAM_BINS))
    expected = np.nan if summary.expected_ht is None else summary.expected_ht
    ht = [summary.trials, summary.ht_mean, summary.ht_std, expected]
    va = [summary.trials, summary.va_mean, summary.va_std, np.nan]
    return pd.DataFrame(
        {
            "record": records,
            "bin_percent": pd.array(bin_percent, dtype="Int64"),
            "ht": ht + summary.histogram_ht.tolist(),
            "va": va + summary.histogram_va.tolist(),
        }
    )


def sweep_frame(rows: list[SweepRow]) -> pd.DataFrame:
    def column(state: int) -> list[float]:
        return [np.nan if row.detection is None else float(row.detection[state]) for row in rows]

    return pd.DataFrame(
        {
            "snr_db": [row.snr_db for row in rows],
            "sigma_hz": [row.sigma for row in rows],
            "p_d_neg": column(0),
            "p_d_zero": column(1),
            "p_d_pos": column(2),
            "status": [row.status for row in rows],
        }
    )


def prediction_frame(series: list[PredictionVector]) -> pd.DataFrame:
    probs = np.array([vector.probs for vector in series])
    return pd.DataFrame(
        {
            "m": [vector.horizon for vector in series],
            "p_neg": probs[:, 0],
            "p_zero": probs[:, 1],
            "p_pos": probs[:, 2],
        }
    )
