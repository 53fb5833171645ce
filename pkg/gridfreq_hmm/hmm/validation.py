"""Model-level validation."""

from typing import Optional

from ..const import USER_TOLERANCE
from ..exceptions import ModelValidationError
from .hmm_model import HmmModel
from .violation import Violation, check_distribution, check_matrix


class ValidationReport:
    """Outcome of :func:`validate`; truthy when the model is valid."""

    def __init__(self, violations: list[Violation]):
        self.violations = violations

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def violation(self) -> Optional[Violation]:
        """First violated invariant, or None."""
        return self.violations[0] if self.violations else None

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        return "ok" if self.ok else str(self.violation)


def validate(model: HmmModel, tolerance: float = USER_TOLERANCE) -> ValidationReport:
    """Check P rows, R columns and Pi0 are probability distributions."""
    violations = (
        check_matrix(model.transitions, tolerance)
        + check_matrix(model.emissions, tolerance)
        + check_distribution("initial", model.initial, tolerance)
    )
    return ValidationReport(violations)


def require_valid(model: HmmModel, tolerance: float = USER_TOLERANCE) -> None:
    """Raise ModelValidationError naming the first violation, if any."""
    report = validate(model, tolerance)
    if not report.ok:
        raise ModelValidationError(report.violation)
