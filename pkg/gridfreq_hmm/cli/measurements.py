"""Measurement CSV ingestion."""

import logging
import math

import numpy as np
import pandas as pd

from ..exceptions import InputOutputError, MeasurementFormatError

_LOGGER = logging.getLogger(__name__)

COLUMN_K = "k"
COLUMN_TIMESTAMP = "timestamp"
COLUMN_FREQUENCY = "z_hz"
INDEX_COLUMNS = (COLUMN_K, COLUMN_TIMESTAMP)

# Row 1 is the header.
FIRST_DATA_ROW = 2


class MeasurementSeries:
    """Frequency records ordered by a strictly increasing index or timestamp."""

    def __init__(
        self,
        index_name: str,
        index_tokens: list[str],
        frequencies: np.ndarray,
        rows: list[int],
    ):
        """Initialize."""
        self.index_name = index_name
        """``k`` or ``timestamp``."""

        self.index_tokens = index_tokens
        """Index values as written in the file, echoed back on output."""

        self.frequencies = frequencies
        """Measured frequencies z (Hz)."""

        self.rows = rows
        """File row number of each record."""

    def __len__(self) -> int:
        return len(self.index_tokens)

    def __str__(self) -> str:
        return f"Records[{len(self)}] Index[{self.index_name}]"


def _parse_index(name: str, token: str):
    if name == COLUMN_K:
        return int(token)
    timestamp = pd.Timestamp(token)
    if pd.isna(timestamp):
        raise ValueError("empty timestamp")
    return timestamp


def _read_frame(path: str) -> pd.DataFrame:
    try:
        return pd.read_csv(path, dtype=str, keep_default_na=False, skip_blank_lines=False)
    except FileNotFoundError as err:
        raise InputOutputError(f"Measurement file not found: {path}") from err
    except pd.errors.EmptyDataError as err:
        raise MeasurementFormatError(path, "file is empty") from err
    except pd.errors.ParserError as err:
        raise MeasurementFormatError(path, f"cannot parse CSV: {err}") from err
    except (OSError, UnicodeDecodeError) as err:
        raise InputOutputError(f"Cannot read measurement file {path}: {err}") from err


def load_measurements(path: str) -> MeasurementSeries:
    """Read a ``k,z_hz`` or ``timestamp,z_hz`` CSV.

    Extra columns after the index are ignored, so a ``simulate`` trace loads as is.
    """
    frame = _read_frame(path)
    frame.columns = [str(column).strip() for column in frame.columns]
    index_name = frame.columns[0]
    if index_name not in INDEX_COLUMNS or COLUMN_FREQUENCY not in frame.columns:
        raise MeasurementFormatError(
            path, f"expected header 'k,z_hz' or 'timestamp,z_hz', got {','.join(frame.columns)}", 1
        )
    if frame.empty:
        raise MeasurementFormatError(path, "no measurement records")

    tokens: list[str] = []
    frequencies: list[float] = []
    rows: list[int] = []
    previous = None
    for position, (index_text, z_text) in enumerate(
        zip(frame[index_name], frame[COLUMN_FREQUENCY])
    ):
        row = position + FIRST_DATA_ROW
        index_text = index_text.strip()
        z_text = z_text.strip()

        try:
            key = _parse_index(index_name, index_text)
        except ValueError as err:
            raise MeasurementFormatError(
                path, f"unparseable {index_name} {index_text!r}", row
            ) from err
        try:
            z = float(z_text)
        except ValueError as err:
            raise MeasurementFormatError(path, f"unparseable z_hz {z_text!r}", row) from err
        if not math.isfinite(z):
            raise MeasurementFormatError(path, f"z_hz must be finite, got {z_text!r}", row)

        try:
            ordered = previous is None or key > previous
        except TypeError as err:
            raise MeasurementFormatError(
                path, f"{index_name} {index_text!r} is not comparable with the previous one", row
            ) from err
        if not ordered:
            raise MeasurementFormatError(
                path, f"{index_name} {index_text!r} is not greater than the previous one", row
            )

        previous = key
        tokens.append(index_text)
        frequencies.append(z)
        rows.append(row)

    series = MeasurementSeries(index_name, tokens, np.array(frequencies), rows)
    _LOGGER.debug("Loaded %s from %s", series, path)
    return series
