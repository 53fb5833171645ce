class GridHmmError(Exception):
    """Base gridfreq_hmm Error."""


class ParameterError(GridHmmError, ValueError):
    """Raised when an argument or model parameter is invalid."""


class DomainError(ParameterError):
    """Raised when a numeric input is not finite."""

    def __init__(self, name: str, value) -> None:
        self.name = name
        self.value = value
        super().__init__(f"{name} must be finite, got {value!r}")


class DegenerateThresholdsError(GridHmmError):
    """Raised when the prior-adjusted thresholds leave no middle decision region."""

    def __init__(self, delta_neg_zero: float, delta_zero_pos: float) -> None:
        self.delta_neg_zero = delta_neg_zero
        self.delta_zero_pos = delta_zero_pos
        super().__init__(
            "Degenerate detector configuration: "
            f"delta_neg_zero={delta_neg_zero!r} is not below delta_zero_pos={delta_zero_pos!r}"
        )


class ModelValidationError(GridHmmError):
    """Raised when an HMM violates a stochasticity invariant."""

    def __init__(self, violation) -> None:
        self.violation = violation
        super().__init__(str(violation))


class StructuralError(GridHmmError):
    """Raised when a Markov chain has no unique limiting distribution."""


class InfeasibleObservationError(GridHmmError):
    """Raised when an observed symbol is impossible under every state."""

    def __init__(self, step: int) -> None:
        self.step = step
        super().__init__(f"Observation at step {step} is impossible under every hidden state")


class SequenceTooLongError(ParameterError):
    """Raised when exhaustive search is requested for a sequence that is too long."""

    def __init__(self, length: int, limit: int) -> None:
        self.length = length
        self.limit = limit
        super().__init__(f"Exhaustive search supports at most {limit} symbols, got {length}")


class ConfigError(GridHmmError):
    """Base configuration Error."""


class ConfigValidationError(ConfigError):
    """Raised with every violation found in a run configuration."""

    def __init__(self, violations: list[str]) -> None:
        self.violations = list(violations)
        super().__init__("Invalid configuration:\n  " + "\n  ".join(self.violations))


class ConfigSyntaxError(ConfigError):
    """Raised when a configuration file cannot be parsed."""

    def __init__(self, path: str, line: int | None, problem: str) -> None:
        self.path = path
        self.line = line
        location = f"{path}:{line}" if line is not None else path
        super().__init__(f"Syntax error in {location}: {problem}")


class MeasurementFormatError(GridHmmError):
    """Raised when a measurement CSV is malformed."""

    def __init__(self, path: str, message: str, row: int | None = None) -> None:
        self.path = path
        self.row = row
        location = f"{path}, row {row}" if row is not None else path
        super().__init__(f"{location}: {message}")


class InputOutputError(GridHmmError):
    """Raised when an input file is missing or unreadable."""
