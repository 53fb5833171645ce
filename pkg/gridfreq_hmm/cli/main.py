"""gridfreq-hmm command line."""

import argparse
import logging
import sys
from typing import Optional, Sequence

from ..exceptions import ConfigValidationError, GridHmmError, InputOutputError
from ..version import VERSION
from .commands import COMMANDS
from .output import open_output, write_table
from .run_config import parse_config

_LOGGER = logging.getLogger(__name__)
# Completion summaries stay visible under -q.
_SUMMARY_LOGGER = logging.getLogger(f"{__name__}.summary")

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_IO = 2

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"

COMMAND_HELP = {
    "emission": "print the emission matrix R and the detector thresholds",
    "detect": "classify each measurement: k,z_hz,x",
    "decode": "classify then Viterbi-decode: k,z_hz,x,s_star",
    "simulate": "synthetic trace: k,s,z_hz,x",
    "montecarlo": "HT vs Viterbi accuracy summary and histograms",
    "sweep": "detection probability against SNR",
    "predict": "state distribution for horizons 0..m",
}


class CommandLineParser(argparse.ArgumentParser):
    """Reports bad arguments as validation errors instead of exiting with status 2."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise ConfigValidationError([f"{self.prog}: {message}"])


def build_parser() -> CommandLineParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", required=True, help="YAML run configuration")
    common.add_argument("--input", default=None, help="measurement CSV (detect, decode)")
    common.add_argument("--output", default="-", help="output CSV path, or - for stdout")
    common.add_argument("--seed", type=int, default=None, help="override base_seed")
    common.add_argument("--trials", type=int, default=None, help="override trials")
    common.add_argument("--threads", type=int, default=None, help="override threads")
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="warnings and the summary line only")

    parser = CommandLineParser(
        prog="gridfreq-hmm",
        description="Grid-frequency deviation estimation with an ML detector and Viterbi.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {VERSION}")
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="command")
    for name, help_text in COMMAND_HELP.items():
        subparsers.add_parser(name, parents=[common], help=help_text, description=help_text)
    return parser


def configure_logging(verbose: bool, quiet: bool):
    level = logging.DEBUG if verbose else logging.WARNING if quiet else logging.INFO
    logging.basicConfig(stream=sys.stderr, level=level, format=LOG_FORMAT)
    logging.getLogger("gridfreq_hmm").setLevel(level)
    _SUMMARY_LOGGER.setLevel(logging.INFO)


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except ConfigValidationError as err:
        configure_logging(verbose=False, quiet=False)
        _LOGGER.error("%s", err)
        return EXIT_VALIDATION
    configure_logging(args.verbose, args.quiet)

    try:
        config = parse_config(args.config).with_overrides(
            base_seed=args.seed, trials=args.trials, threads=args.threads
        )
        result = COMMANDS[args.command](config, args.input)
        with open_output(args.output) as stream:
            write_table(result.frame, stream)
    except InputOutputError as err:
        _LOGGER.error("%s", err)
        return EXIT_IO
    except OSError as err:
        _LOGGER.error("I/O error: %s", err)
        return EXIT_IO
    except GridHmmError as err:
        _LOGGER.error("%s", err)
        return EXIT_VALIDATION

    _SUMMARY_LOGGER.info("%s", result.summary_line())
    return EXIT_OK
