"""Test configuration, measurement ingestion and the command line."""

import io
import logging
import textwrap

import numpy as np
import pandas as pd
import pytest

from gridfreq_hmm.cli import load_measurements, main, parse_config
from gridfreq_hmm.cli.main import EXIT_IO, EXIT_OK, EXIT_VALIDATION
from gridfreq_hmm.const import EmissionSource, SymbolSource
from gridfreq_hmm.detector import StateSymbol
from gridfreq_hmm.exceptions import (
    ConfigSyntaxError,
    ConfigValidationError,
    InputOutputError,
    MeasurementFormatError,
)
from gridfreq_hmm.viterbi import SymbolSequence, viterbi_decode

from .conftest import NUMERIC_EMISSIONS

TRANSITIONS = "transitions:\n  - [0.2, 0.7, 0.1]\n  - [0.1, 0.8, 0.1]\n  - [0.1, 0.7, 0.2]\n"


def _read_csv(path) -> pd.DataFrame:
    return pd.read_csv(path)


def test_parse_config_numeric_setup(numeric_config):
    """The numeric setup loads with defaults filled in."""
    config = parse_config(numeric_config)
    assert config.params.means.tolist() == [49.0, 50.0, 51.0]
    assert config.params.priors == (0.1, 0.8, 0.1)
    assert config.length == 100 and config.trials == 10_000 and config.base_seed == 0
    assert config.symbol_source == SymbolSource.EMISSION
    assert config.emission_source == EmissionSource.ANALYTIC
    assert config.emissions is None and config.predict_from is None


def test_parse_config_nominal_means(write_file):
    """f0=50 with deltas of 1 Hz gives means (49, 50, 51)."""
    path = write_file(
        "nominal.yaml",
        "f0: 50\ndelta_f_min: 1\ndelta_f_max: 1\nsigma: 0.2\n" + TRANSITIONS,
    )
    assert parse_config(path).params.means.tolist() == [49.0, 50.0, 51.0]


def test_parse_config_rejects_unnormalized_priors(write_file):
    """priors (0.5, 0.5, 0.5) is reported against the priors field."""
    path = write_file(
        "priors.yaml", "means: [49, 50, 51]\nsigma: 0.2\npriors: [0.5, 0.5, 0.5]\n" + TRANSITIONS
    )
    with pytest.raises(ConfigValidationError) as err:
        parse_config(path)
    assert any(violation.startswith("priors:") for violation in err.value.violations)


def test_parse_config_rejects_both_mean_conventions(write_file):
    """means together with f0/deltas is a conflict."""
    path = write_file(
        "both.yaml",
        "means: [49, 50, 51]\nf0: 50\ndelta_f_min: 1\ndelta_f_max: 1\nsigma: 0.2\n" + TRANSITIONS,
    )
    with pytest.raises(ConfigValidationError, match="conflicts"):
        parse_config(path)


def test_parse_config_reports_every_violation(write_file):
    """One run lists all problems, not just the first."""
    path = write_file(
        "broken.yaml",
        """
        means: [51, 50, 49]
        sigma: -0.2
        priors: [0.5, 0.5, 0.5]
        transitions:
          - [0.2, 0.7, 0.1]
          - [0.1, 0.7, 0.1]
          - [0.1, 0.7, 0.2]
        length: 0
        colour: blue
        snr_db: [1.0]
        sigmas: [0.1]
        """,
    )
    with pytest.raises(ConfigValidationError) as err:
        parse_config(path)
    fields = {violation.split(":")[0] for violation in err.value.violations}
    assert {"means", "sigma", "priors", "transitions", "length", "colour", "snr_db"} <= fields
    assert any("row 1" in violation for violation in err.value.violations)


def test_parse_config_needs_means(write_file):
    """Some mean convention is required."""
    path = write_file("nomeans.yaml", "sigma: 0.2\n" + TRANSITIONS)
    with pytest.raises(ConfigValidationError, match="means: required"):
        parse_config(path)


def test_parse_config_partial_nominal(write_file):
    """f0 without both deltas names the missing key."""
    path = write_file("partial.yaml", "f0: 50\ndelta_f_min: 1\nsigma: 0.2\n" + TRANSITIONS)
    with pytest.raises(ConfigValidationError, match="delta_f_max"):
        parse_config(path)


def test_parse_config_degenerate_thresholds(write_file):
    """Inverted thresholds are a configuration error."""
    path = write_file(
        "degenerate.yaml", "means: [49, 50, 51]\nsigma: 2.0\npriors: [0.45, 0.1, 0.45]\n" + TRANSITIONS
    )
    with pytest.raises(ConfigValidationError, match="Degenerate"):
        parse_config(path)


def test_parse_config_defaults_priors(write_file, caplog):
    """Missing priors become equal priors, with a notice."""
    path = write_file("nopriors.yaml", "means: [49.6, 50, 50.4]\nsigma: 0.1\n" + TRANSITIONS)
    with caplog.at_level(logging.INFO):
        config = parse_config(path)
    assert config.params.priors == pytest.approx((1 / 3, 1 / 3, 1 / 3))
    assert "equal priors" in caplog.text


def test_parse_config_optional_keys(write_file):
    """Explicit R, prediction start and sweep grid are carried through."""
    path = write_file(
        "full.yaml",
        textwrap.dedent(
            """
        means: [49, 50, 51]
        sigma: 0.2
        priors: [0.1, 0.8, 0.1]
        emissions:
          - [0.9, 0.05, 0.0]
          - [0.1, 0.9, 0.1]
          - [0.0, 0.05, 0.9]
        predict_from: -1
        sigmas: [0.1, 0.2]
        symbol_source: measurement
        base_seed: 18446744073709551615
        """
        )
        + TRANSITIONS,
    )
    config = parse_config(path)
    assert config.emission_matrix().values[1, 1] == 0.9
    assert config.predict_from == StateSymbol.NEGATIVE
    assert config.sigmas == [0.1, 0.2]
    assert config.symbol_source == SymbolSource.MEASUREMENT
    assert config.base_seed == 2**64 - 1


def test_parse_config_syntax_error(write_file):
    """YAML errors carry a line number."""
    path = write_file("syntax.yaml", "sigma: 0.2\nmeans: [49, 50\ntransitions: oops\n")
    with pytest.raises(ConfigSyntaxError) as err:
        parse_config(path)
    assert err.value.line is not None and err.value.line >= 2


def test_parse_config_not_a_mapping(write_file):
    """A bare list is not a configuration."""
    with pytest.raises(ConfigValidationError):
        parse_config(write_file("list.yaml", "- 1\n- 2\n"))


def test_parse_config_missing_file(tmp_path):
    """A missing file is an I/O error."""
    with pytest.raises(InputOutputError):
        parse_config(str(tmp_path / "missing.yaml"))


def test_config_overrides(numeric_config):
    """Command-line overrides replace file values after validation."""
    config = parse_config(numeric_config).with_overrides(base_seed=5, trials=7, threads=2)
    assert (config.base_seed, config.trials, config.threads) == (5, 7, 2)
    with pytest.raises(ConfigValidationError):
        parse_config(numeric_config).with_overrides(trials=0, threads=0)


def test_empirical_emission_source(write_file):
    """emission_source: empirical estimates R from synthetic measurements."""
    path = write_file(
        "empirical.yaml",
        "means: [49, 50, 51]\nsigma: 0.2\npriors: [0.1, 0.8, 0.1]\n"
        "emission_source: empirical\nempirical_samples: 20000\n" + TRANSITIONS,
    )
    config = parse_config(path)
    emissions = config.emission_matrix()
    assert np.allclose(emissions.values, NUMERIC_EMISSIONS, rtol=0.0, atol=0.01)
    assert emissions == config.emission_matrix()


def test_load_measurements_two_records(write_file):
    """k,z_hz rows load in order."""
    series = load_measurements(write_file("m.csv", "k,z_hz\n1,49.97\n2,50.02\n"))
    assert len(series) == 2
    assert series.index_name == "k"
    assert series.frequencies.tolist() == [49.97, 50.02]
    assert series.rows == [2, 3]


def test_load_measurements_timestamps(write_file):
    """timestamp,z_hz rows load and keep their original text."""
    series = load_measurements(
        write_file("t.csv", "timestamp,z_hz\n2024-01-01T00:00:00,50.01\n2024-01-01T00:00:01,49.99\n")
    )
    assert series.index_tokens == ["2024-01-01T00:00:00", "2024-01-01T00:00:01"]


@pytest.mark.parametrize(
    "text, row, message",
    [
        ("k,z_hz\n1,49.97\n1,50.02\n", 3, "not greater"),
        ("k,z_hz\n2,49.97\n1,50.02\n", 3, "not greater"),
        ("k,z_hz\n1,49.97\n2,NaN\n", 3, "finite"),
        ("k,z_hz\n1,fifty\n", 2, "unparseable z_hz"),
        ("k,z_hz\none,50\n", 2, "unparseable k"),
        ("k,z_hz\n1,50\n2,inf\n", 3, "finite"),
        ("timestamp,z_hz\n2024-01-02,50\n2024-01-01,50\n", 3, "not greater"),
    ],
)
def test_load_measurements_row_errors(write_file, text, row, message):
    """Bad rows are rejected with their file row number."""
    with pytest.raises(MeasurementFormatError, match=message) as err:
        load_measurements(write_file("bad.csv", text))
    assert err.value.row == row


@pytest.mark.parametrize("text", ["", "k,z_hz\n", "time,z\n1,50\n"])
def test_load_measurements_rejects_empty_or_bad_header(write_file, text):
    """Empty files, header-only files and unknown headers are rejected."""
    with pytest.raises(MeasurementFormatError):
        load_measurements(write_file("empty.csv", text))


def test_load_measurements_missing_file(tmp_path):
    """A missing file is an I/O error."""
    with pytest.raises(InputOutputError):
        load_measurements(str(tmp_path / "missing.csv"))


def test_cli_emission_reproduces_printed_matrix(numeric_config, tmp_path, caplog):
    """emission prints R matching the printed matrix to 4 decimals."""
    output = tmp_path / "r.csv"
    with caplog.at_level(logging.INFO):
        assert main(["emission", "--config", numeric_config, "--output", str(output)]) == EXIT_OK
    frame = _read_csv(output)
    assert frame.columns.tolist() == ["x", "s_neg", "s_zero", "s_pos"]
    assert frame["x"].tolist() == [-1, 0, 1]
    assert np.allclose(frame[["s_neg", "s_zero", "s_pos"]].to_numpy(), NUMERIC_EMISSIONS, atol=5e-5)
    assert "command=emission" in caplog.text
    assert "delta_neg_zero=49.4168" in caplog.text


def test_cli_writes_to_stdout(numeric_config, capsys):
    """Data goes to stdout when no output file is given."""
    assert main(["predict", "--config", numeric_config, "-q"]) == EXIT_OK
    frame = pd.read_csv(io.StringIO(capsys.readouterr().out))
    assert frame.columns.tolist() == ["m", "p_neg", "p_zero", "p_pos"]
    assert frame.iloc[0, 1:].tolist() == [0.1, 0.8, 0.1]
    assert frame["m"].tolist() == list(range(11))


def test_cli_predict_from_state(write_file, tmp_path):
    """predict_from starts the forecast from a one-hot vector."""
    path = write_file(
        "from.yaml", "means: [49, 50, 51]\nsigma: 0.2\npredict_from: 0\nhorizon: 1\n" + TRANSITIONS
    )
    output = tmp_path / "p.csv"
    assert main(["predict", "--config", path, "--output", str(output)]) == EXIT_OK
    frame = _read_csv(output)
    assert frame.iloc[1, 1:].tolist() == [0.1, 0.8, 0.1]


def test_cli_detect(numeric_config, write_file, tmp_path):
    """detect emits k,z_hz,x."""
    measurements = write_file("z.csv", "k,z_hz\n1,49.0\n2,50.0\n3,51.0\n4,49.4168\n")
    output = tmp_path / "x.csv"
    code = main(
        ["detect", "--config", numeric_config, "--input", measurements, "--output", str(output)]
    )
    assert code == EXIT_OK
    frame = _read_csv(output)
    assert frame.columns.tolist() == ["k", "z_hz", "x"]
    assert frame["x"].tolist() == [-1, 0, 1, -1]


def test_cli_simulate_then_decode_round_trip(numeric_config, tmp_path):
    """Decoding a simulated trace reproduces the in-process pipeline exactly."""
    trace = tmp_path / "trace.csv"
    decoded_path = tmp_path / "decoded.csv"
    assert (
        main(["simulate", "--config", numeric_config, "--seed", "17", "--output", str(trace)])
        == EXIT_OK
    )
    simulated = _read_csv(trace)
    assert simulated.columns.tolist() == ["k", "s", "z_hz", "x"]
    assert len(simulated) == 100

    args = ["decode", "--config", numeric_config, "--input", str(trace)]
    assert main(args + ["--output", str(decoded_path)]) == EXIT_OK
    decoded = _read_csv(decoded_path)
    assert decoded.columns.tolist() == ["k", "z_hz", "x", "s_star"]
    assert decoded["x"].tolist() == simulated["x"].tolist()
    assert decoded["z_hz"].tolist() == simulated["z_hz"].tolist()

    model = parse_config(numeric_config).build_model()
    expected = viterbi_decode(SymbolSequence(simulated["x"].tolist()), model)
    assert decoded["s_star"].tolist() == expected.to_labels()

    again = tmp_path / "again.csv"
    assert main(args + ["--output", str(again)]) == EXIT_OK
    assert again.read_bytes() == decoded_path.read_bytes()


def test_cli_montecarlo_is_thread_independent(numeric_config, tmp_path):
    """Output bytes do not depend on the thread count."""
    outputs = []
    for threads in ("1", "3"):
        output = tmp_path / f"mc_{threads}.csv"
        args = ["montecarlo", "--config", numeric_config, "--trials", "300", "--seed", "9"]
        assert main(args + ["--threads", threads, "--output", str(output)]) == EXIT_OK
        outputs.append(output.read_bytes())
    assert outputs[0] == outputs[1]

    frame = _read_csv(tmp_path / "mc_1.csv")
    assert frame.columns.tolist() == ["record", "bin_percent", "ht", "va"]
    assert frame["record"].tolist()[:4] == ["trials", "mean", "std", "expected"]
    bins = frame[frame["record"] == "bin"]
    assert len(bins) == 101
    assert bins["ht"].sum() == 300 and bins["va"].sum() == 300


def test_cli_montecarlo_reports_published_values(write_file, tmp_path, caplog):
    """At sigma=0.4 the summary line carries the published means."""
    path = write_file(
        "mc.yaml",
        "means: [49.4, 50, 50.7]\nsigma: 0.4\npriors: [0.25, 0.6, 0.15]\nlength: 20\ntrials: 40\n"
        + TRANSITIONS,
    )
    with caplog.at_level(logging.INFO):
        assert main(["montecarlo", "--config", path, "--output", str(tmp_path / "o.csv")]) == 0
    assert "published_ht_mean=64.1998" in caplog.text
    assert "published_min_gain=5" in caplog.text


def test_cli_sweep(write_file, tmp_path):
    """sweep emits one row per grid point, degenerate rows left blank."""
    path = write_file(
        "sweep.yaml",
        "means: [49, 50, 51]\nsigma: 0.2\npriors: [0.45, 0.1, 0.45]\nsigmas: [2.0, 0.1]\n"
        + TRANSITIONS,
    )
    output = tmp_path / "sweep.csv"
    assert main(["sweep", "--config", path, "--output", str(output)]) == EXIT_OK
    frame = _read_csv(output)
    assert frame.columns.tolist() == [
        "snr_db",
        "sigma_hz",
        "p_d_neg",
        "p_d_zero",
        "p_d_pos",
        "status",
    ]
    assert frame["status"].tolist() == ["degenerate", "ok"]
    assert frame.loc[0, ["p_d_neg", "p_d_zero", "p_d_pos"]].isna().all()


def test_cli_decode_requires_input(numeric_config):
    """detect and decode without --input are validation errors."""
    assert main(["decode", "--config", numeric_config]) == EXIT_VALIDATION


def test_cli_missing_input_file(numeric_config, tmp_path):
    """A missing measurement file is an I/O error."""
    missing = str(tmp_path / "missing.csv")
    assert main(["detect", "--config", numeric_config, "--input", missing]) == EXIT_IO


def test_cli_missing_config(tmp_path):
    """A missing configuration is an I/O error."""
    assert main(["emission", "--config", str(tmp_path / "nope.yaml")]) == EXIT_IO


def test_cli_invalid_config(write_file, caplog):
    """Validation problems exit with 1 and are logged."""
    path = write_file("bad.yaml", "means: [49, 50, 51]\nsigma: 0\n" + TRANSITIONS)
    with caplog.at_level(logging.ERROR):
        assert main(["emission", "--config", path]) == EXIT_VALIDATION
    assert "sigma" in caplog.text


def test_cli_bad_measurement_row(numeric_config, write_file):
    """Malformed measurements exit with 1."""
    measurements = write_file("bad.csv", "k,z_hz\n1,49.0\n2,NaN\n")
    assert main(["detect", "--config", numeric_config, "--input", measurements]) == EXIT_VALIDATION


def test_cli_unwritable_output(numeric_config, tmp_path):
    """An output path in a missing directory is an I/O error."""
    output = tmp_path / "missing" / "r.csv"
    assert main(["emission", "--config", numeric_config, "--output", str(output)]) == EXIT_IO


@pytest.mark.parametrize(
    "extra",
    [["--trials", "abc"], ["--seed", "x"], ["--threads", "1.5"], ["--colour", "blue"]],
)
def test_cli_bad_arguments_are_validation_errors(numeric_config, extra):
    """Malformed command-line values exit with 1, not argparse's 2."""
    assert main(["montecarlo", "--config", numeric_config] + extra) == EXIT_VALIDATION


def test_cli_missing_config_flag_is_validation_error():
    """--config is required."""
    assert main(["emission"]) == EXIT_VALIDATION
    assert main([]) == EXIT_VALIDATION


def test_cli_quiet_keeps_summary_line(numeric_config, tmp_path, caplog):
    """-q hides info chatter but still reports the thresholds."""
    output = tmp_path / "r.csv"
    assert main(["emission", "--config", numeric_config, "-q", "--output", str(output)]) == EXIT_OK
    assert "delta_neg_zero=49.4168" in caplog.text
    assert "delta_zero_pos=50.5832" in caplog.text
