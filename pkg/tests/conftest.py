"""Fixtures for testing."""

import textwrap

import pytest

from gridfreq_hmm.detector import DetectorParams
from gridfreq_hmm.hmm import HmmModel, TransitionMatrix

NUMERIC_TRANSITIONS = [[0.2, 0.7, 0.1], [0.1, 0.8, 0.1], [0.1, 0.7, 0.2]]
NUMERIC_STATIONARY = (1.0 / 9.0, 7.0 / 9.0, 1.0 / 9.0)

# Printed emission matrix for sigma=0.2, priors (0.1, 0.8, 0.1), means (49, 50, 51).
NUMERIC_EMISSIONS = [
    [0.9814, 0.0018, 0.0000],
    [0.0186, 0.9965, 0.0186],
    [0.0000, 0.0018, 0.9814],
]

NUMERIC_CONFIG = """
    means: [49.0, 50.0, 51.0]
    sigma: 0.2
    priors: [0.1, 0.8, 0.1]
    transitions:
      - [0.2, 0.7, 0.1]
      - [0.1, 0.8, 0.1]
      - [0.1, 0.7, 0.2]
"""


@pytest.fixture
def numeric_transitions():
    """Transition matrix of the numeric setup."""
    return TransitionMatrix(NUMERIC_TRANSITIONS)


@pytest.fixture
def numeric_params():
    """Detector of the numeric setup."""
    return DetectorParams(49.0, 50.0, 51.0, 0.2, (0.1, 0.8, 0.1))


@pytest.fixture
def numeric_model(numeric_params, numeric_transitions):
    """HMM with the closed-form R of the numeric setup."""
    return HmmModel.from_params(numeric_params, numeric_transitions)


@pytest.fixture
def monte_carlo_params():
    """Detector of the Monte Carlo setup at sigma=0.4."""
    return DetectorParams(49.4, 50.0, 50.7, 0.4, (0.25, 0.6, 0.15))


@pytest.fixture
def write_file(tmp_path):
    """Write dedented text to a file under tmp_path and return its path."""

    def _write(name: str, text: str) -> str:
        path = tmp_path / name
        path.write_text(textwrap.dedent(text).lstrip("\n"), encoding="utf-8")
        return str(path)

    return _write


@pytest.fixture
def numeric_config(write_file):
    """Path of a YAML config for the numeric setup."""
    return write_file("numeric.yaml", NUMERIC_CONFIG)
