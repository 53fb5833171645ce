"""Detection probability against measurement quality."""

import math
from typing import Optional, Sequence

from ..const import DEFAULT_SNR_GRID_DB
from ..detector.detector_params import DetectorParams
from ..detector.ml_detector import compute_thresholds, detection_probabilities
from ..exceptions import DegenerateThresholdsError, ParameterError
from ..logger import LOGGER
from ..numerics import Probability

STATUS_OK = "ok"
STATUS_DEGENERATE = "degenerate"


def snr_db_to_sigma(snr_db: float) -> float:
    """SNR is 1/sigma, in dB as 10 log10(1/sigma)."""
    return 10.0 ** (-snr_db / 10.0)


def sigma_to_snr_db(sigma: float) -> float:
    return -10.0 * math.log10(sigma)


class SweepRow:
    """One grid point; ``detection`` is None when the thresholds are degenerate."""

    def __init__(
        self,
        snr_db: float,
        sigma: float,
        detection: Optional[tuple[Probability, Probability, Probability]],
    ):
        """Initialize."""
        self.snr_db = snr_db
        self.sigma = sigma
        self.detection = detection

    @property
    def status(self) -> str:
        return STATUS_DEGENERATE if self.detection is None else STATUS_OK

    def __str__(self) -> str:
        if self.detection is None:
            return f"SNR[{self.snr_db:.2f} dB] degenerate"
        p_neg, p_zero, p_pos = (round(float(p), 4) for p in self.detection)
        return f"SNR[{self.snr_db:.2f} dB] P_d[{p_neg}, {p_zero}, {p_pos}]"


def _finite_grid(name: str, values: Sequence[float]) -> list[float]:
    grid = [float(value) for value in values]
    if not grid:
        raise ParameterError(f"{name} must not be empty")
    for value in grid:
        if not math.isfinite(value):
            raise ParameterError(f"{name} entries must be finite, got {value!r}")
    return grid


def detection_sweep(
    params: DetectorParams,
    snr_grid_db: Optional[Sequence[float]] = None,
    sigma_grid: Optional[Sequence[float]] = None,
) -> list[SweepRow]:
    """P_d for every grid point, using ``params`` with sigma replaced.

    Give at most one of ``snr_grid_db`` and ``sigma_grid``; without either the
    default 0..20 dB grid is used. Degenerate thresholds are reported per row.
    """
    if snr_grid_db is not None and sigma_grid is not None:
        raise ParameterError("Give either an SNR grid or a sigma grid, not both")

    if sigma_grid is not None:
        sigmas = _finite_grid("sigma_grid", sigma_grid)
        if any(sigma <= 0.0 for sigma in sigmas):
            raise ParameterError(f"sigma_grid entries must be positive, got {sigmas}")
        points = [(sigma_to_snr_db(sigma), sigma) for sigma in sigmas]
    else:
        grid = _finite_grid(
            "snr_grid_db", DEFAULT_SNR_GRID_DB if snr_grid_db is None else snr_grid_db
        )
        points = [(snr_db, snr_db_to_sigma(snr_db)) for snr_db in grid]

    rows = []
    for snr_db, sigma in points:
        point_params = params.with_sigma(sigma)
        try:
            thresholds = compute_thresholds(point_params)
        except DegenerateThresholdsError as err:
            LOGGER.warning("Skipping SNR %.3f dB (sigma=%.6g): %s", snr_db, sigma, err)
            rows.append(SweepRow(snr_db, sigma, None))
            continue
        rows.append(SweepRow(snr_db, sigma, detection_probabilities(point_params, thresholds)))
    return rows
