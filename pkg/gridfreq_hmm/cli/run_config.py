"""YAML run configuration."""

import logging
import math
from typing import Any, Optional

import numpy as np
import voluptuous as vol
import yaml

from ..const import (
    CALIBRATION_STREAM_INDEX,
    DEFAULT_EMPIRICAL_SAMPLES,
    DEFAULT_HORIZON,
    DEFAULT_LENGTH,
    DEFAULT_TRIALS,
    EmissionSource,
    SymbolSource,
)
from ..detector.detector_params import DetectorParams
from ..detector.ml_detector import compute_thresholds
from ..detector.state_symbol import StateSymbol
from ..exceptions import (
    ConfigSyntaxError,
    ConfigValidationError,
    DegenerateThresholdsError,
    InputOutputError,
)
from ..hmm.emission_builder import build_emission_matrix
from ..hmm.hmm_model import HmmModel
from ..hmm.stochastic_matrix import EmissionMatrix, StochasticMatrix, TransitionMatrix
from ..hmm.violation import check_distribution, check_matrix
from ..numerics import RngStream
from ..simulation.emission_estimation import estimate_emission_matrix

_LOGGER = logging.getLogger(__name__)

CONF_MEANS = "means"
CONF_F0 = "f0"
CONF_DELTA_F_MIN = "delta_f_min"
CONF_DELTA_F_MAX = "delta_f_max"
CONF_SIGMA = "sigma"
CONF_PRIORS = "priors"
CONF_TRANSITIONS = "transitions"
CONF_EMISSIONS = "emissions"
CONF_EMISSION_SOURCE = "emission_source"
CONF_EMPIRICAL_SAMPLES = "empirical_samples"
CONF_LENGTH = "length"
CONF_TRIALS = "trials"
CONF_BASE_SEED = "base_seed"
CONF_THREADS = "threads"
CONF_SYMBOL_SOURCE = "symbol_source"
CONF_SNR_DB = "snr_db"
CONF_SIGMAS = "sigmas"
CONF_HORIZON = "horizon"
CONF_PREDICT_FROM = "predict_from"

NOMINAL_KEYS = (CONF_F0, CONF_DELTA_F_MIN, CONF_DELTA_F_MAX)
MAX_SEED = 2**64 - 1


def _finite(value: float) -> float:
    if not math.isfinite(value):
        raise vol.Invalid("must be finite")
    return value


REAL = vol.All(vol.Coerce(float), _finite)
POSITIVE = vol.All(REAL, vol.Range(min=0.0, min_included=False, msg="must be positive"))
COUNT = vol.All(int, vol.Range(min=1, msg="must be at least 1"))


def _triple(item) -> vol.All:
    return vol.All([item], vol.Length(min=3, max=3, msg="must have exactly 3 entries"))


def _strictly_increasing(values: list[float]) -> list[float]:
    if not values[0] < values[1] < values[2]:
        raise vol.Invalid("must satisfy m_neg < m_zero < m_pos")
    return values


def _strictly_positive(values: list[float]) -> list[float]:
    if any(value <= 0.0 for value in values):
        raise vol.Invalid(f"entries must be strictly positive, got {values}")
    return values


def _distribution(values: list[float]) -> list[float]:
    violations = check_distribution(CONF_PRIORS, np.asarray(values))
    if violations:
        raise vol.Invalid("; ".join(violation.detail() for violation in violations))
    return values


def _stochastic(matrix_type: type[StochasticMatrix]):
    def validator(rows: list[list[float]]) -> list[list[float]]:
        violations = check_matrix(matrix_type(rows))
        if violations:
            raise vol.Invalid("; ".join(violation.detail() for violation in violations))
        return rows

    return validator


MATRIX = vol.All([_triple(REAL)], vol.Length(min=3, max=3, msg="must have exactly 3 rows"))

CONFIG_SCHEMA = vol.Schema(
    {
        vol.Optional(CONF_MEANS): vol.All(_triple(REAL), _strictly_increasing),
        vol.Optional(CONF_F0): REAL,
        vol.Optional(CONF_DELTA_F_MIN): POSITIVE,
        vol.Optional(CONF_DELTA_F_MAX): POSITIVE,
        vol.Required(CONF_SIGMA): POSITIVE,
        vol.Optional(CONF_PRIORS): vol.All(_triple(REAL), _strictly_positive, _distribution),
        vol.Required(CONF_TRANSITIONS): vol.All(MATRIX, _stochastic(TransitionMatrix)),
        vol.Optional(CONF_EMISSIONS): vol.All(MATRIX, _stochastic(EmissionMatrix)),
        vol.Optional(CONF_EMISSION_SOURCE, default=EmissionSource.ANALYTIC.value): vol.In(
            [source.value for source in EmissionSource]
        ),
        vol.Optional(CONF_EMPIRICAL_SAMPLES, default=DEFAULT_EMPIRICAL_SAMPLES): COUNT,
        vol.Optional(CONF_LENGTH, default=DEFAULT_LENGTH): COUNT,
        vol.Optional(CONF_TRIALS, default=DEFAULT_TRIALS): COUNT,
        vol.Optional(CONF_BASE_SEED, default=0): vol.All(
            int, vol.Range(min=0, max=MAX_SEED, msg="must be an unsigned 64-bit integer")
        ),
        vol.Optional(CONF_THREADS, default=1): COUNT,
        vol.Optional(CONF_SYMBOL_SOURCE, default=SymbolSource.EMISSION.value): vol.In(
            [source.value for source in SymbolSource]
        ),
        vol.Optional(CONF_SNR_DB): vol.All([REAL], vol.Length(min=1)),
        vol.Optional(CONF_SIGMAS): vol.All([POSITIVE], vol.Length(min=1)),
        vol.Optional(CONF_HORIZON, default=DEFAULT_HORIZON): vol.All(
            int, vol.Range(min=0, msg="must be non-negative")
        ),
        vol.Optional(CONF_PREDICT_FROM): vol.In([-1, 0, 1]),
    }
)


def _field_name(path: list) -> str:
    name = ""
    for part in path:
        name += f"[{part}]" if isinstance(part, int) else ("." if name else "") + str(part)
    return name or "<root>"


def _convention_violations(data: dict[str, Any]) -> list[str]:
    """Checks spanning several keys, run on the raw mapping."""
    violations = []
    nominal = [key for key in NOMINAL_KEYS if key in data]
    if CONF_MEANS in data and nominal:
        violations.append(
            f"{CONF_MEANS}: conflicts with {', '.join(nominal)}; "
            "give either means or f0/delta_f_min/delta_f_max"
        )
    elif CONF_MEANS not in data and not nominal:
        violations.append(f"{CONF_MEANS}: required (or f0, delta_f_min and delta_f_max)")
    elif nominal and len(nominal) < len(NOMINAL_KEYS):
        missing = [key for key in NOMINAL_KEYS if key not in data]
        violations.append(f"{missing[0]}: required together with {', '.join(nominal)}")
    if CONF_SNR_DB in data and CONF_SIGMAS in data:
        violations.append(f"{CONF_SNR_DB}: conflicts with {CONF_SIGMAS}; give one sweep grid")
    return violations


class RunConfig:
    """Validated run configuration."""

    def __init__(
        self,
        params: DetectorParams,
        transitions: TransitionMatrix,
        emissions: Optional[EmissionMatrix] = None,
        emission_source: EmissionSource = EmissionSource.ANALYTIC,
        empirical_samples: int = DEFAULT_EMPIRICAL_SAMPLES,
        length: int = DEFAULT_LENGTH,
        trials: int = DEFAULT_TRIALS,
        base_seed: int = 0,
        threads: int = 1,
        symbol_source: SymbolSource = SymbolSource.EMISSION,
        snr_db: Optional[list[float]] = None,
        sigmas: Optional[list[float]] = None,
        horizon: int = DEFAULT_HORIZON,
        predict_from: Optional[StateSymbol] = None,
    ):
        """Initialize."""
        self.params = params
        self.transitions = transitions
        self.emissions = emissions
        """Explicit R; when None, R comes from ``emission_source``."""

        self.emission_source = emission_source
        self.empirical_samples = empirical_samples
        self.length = length
        self.trials = trials
        self.base_seed = base_seed
        self.threads = threads
        self.symbol_source = symbol_source
        self.snr_db = snr_db
        self.sigmas = sigmas
        self.horizon = horizon
        self.predict_from = predict_from

    @classmethod
    def from_dict(cls, data: Any) -> "RunConfig":
        """Create instance from a parsed mapping, reporting every violation at once."""
        if not isinstance(data, dict):
            raise ConfigValidationError(["<root>: expected a mapping of keys to values"])

        violations = _convention_violations(data)
        try:
            values = CONFIG_SCHEMA(data)
        except vol.MultipleInvalid as err:
            violations.extend(f"{_field_name(error.path)}: {error.msg}" for error in err.errors)
            raise ConfigValidationError(violations) from err
        if violations:
            raise ConfigValidationError(violations)

        if CONF_PRIORS in values:
            priors = values[CONF_PRIORS]
        else:
            priors = (1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0)
            _LOGGER.warning("No priors configured, using equal priors (1/3, 1/3, 1/3)")

        if CONF_MEANS in values:
            params = DetectorParams(*values[CONF_MEANS], values[CONF_SIGMA], priors)
        else:
            params = DetectorParams.from_nominal(
                values[CONF_F0],
                values[CONF_DELTA_F_MIN],
                values[CONF_DELTA_F_MAX],
                values[CONF_SIGMA],
                priors,
            )
        try:
            compute_thresholds(params)
        except DegenerateThresholdsError as err:
            raise ConfigValidationError([f"{CONF_PRIORS}/{CONF_SIGMA}: {err}"]) from err

        emissions = values.get(CONF_EMISSIONS)
        predict_from = values.get(CONF_PREDICT_FROM)
        return cls(
            params=params,
            transitions=TransitionMatrix(values[CONF_TRANSITIONS]),
            emissions=EmissionMatrix(emissions) if emissions is not None else None,
            emission_source=EmissionSource(values[CONF_EMISSION_SOURCE]),
            empirical_samples=values[CONF_EMPIRICAL_SAMPLES],
            length=values[CONF_LENGTH],
            trials=values[CONF_TRIALS],
            base_seed=values[CONF_BASE_SEED],
            threads=values[CONF_THREADS],
            symbol_source=SymbolSource(values[CONF_SYMBOL_SOURCE]),
            snr_db=values.get(CONF_SNR_DB),
            sigmas=values.get(CONF_SIGMAS),
            horizon=values[CONF_HORIZON],
            predict_from=StateSymbol(predict_from) if predict_from is not None else None,
        )

    def with_overrides(
        self,
        base_seed: Optional[int] = None,
        trials: Optional[int] = None,
        threads: Optional[int] = None,
    ) -> "RunConfig":
        """Apply command-line overrides, validated like the file values."""
        violations = []
        if base_seed is not None and not 0 <= base_seed <= MAX_SEED:
            violations.append(f"--seed: must be an unsigned 64-bit integer, got {base_seed}")
        if trials is not None and trials < 1:
            violations.append(f"--trials: must be at least 1, got {trials}")
        if threads is not None and threads < 1:
            violations.append(f"--threads: must be at least 1, got {threads}")
        if violations:
            raise ConfigValidationError(violations)

        if base_seed is not None:
            self.base_seed = base_seed
        if trials is not None:
            self.trials = trials
        if threads is not None:
            self.threads = threads
        return self

    def emission_matrix(self) -> EmissionMatrix:
        """Explicit R, or R from the detector (closed form or estimated)."""
        if self.emissions is not None:
            return self.emissions
        if self.emission_source == EmissionSource.EMPIRICAL:
            rng = RngStream(self.base_seed, CALIBRATION_STREAM_INDEX)
            return estimate_emission_matrix(self.params, self.empirical_samples, rng)
        return build_emission_matrix(self.params)

    def build_model(self) -> HmmModel:
        return HmmModel.from_params(self.params, self.transitions, self.emission_matrix())


def parse_config(path: str) -> RunConfig:
    """Load and validate a YAML run configuration."""
    try:
        with open(path, encoding="utf-8") as file:
            text = file.read()
    except OSError as err:
        raise InputOutputError(f"Cannot read configuration {path}: {err}") from err

    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as err:
        mark = getattr(err, "problem_mark", None)
        line = mark.line + 1 if mark is not None else None
        problem = getattr(err, "problem", None) or str(err)
        raise ConfigSyntaxError(path, line, problem) from err

    config = RunConfig.from_dict(data)
    _LOGGER.debug("Loaded configuration %s: %r", path, config.params)
    return config
