"""Individual stochasticity violations."""

from typing import Optional

import numpy as np

from ..const import USER_TOLERANCE
from .stochastic_matrix import StochasticMatrix


class Violation:
    """One broken invariant, with where it broke and by how much."""

    def __init__(self, subject: str, rule: str, index: Optional[tuple[int, ...]], value: float):
        self.subject = subject
        """Which object: ``transitions``, ``emissions`` or ``initial``."""

        self.rule = rule
        """``row_sum``, ``column_sum``, ``entry_range``, ``sum`` or ``negative``."""

        self.index = index
        self.value = value
        """Offending sum or entry."""

    def detail(self) -> str:
        """Description without the subject name."""
        if self.rule in ("row_sum", "column_sum"):
            line = self.rule.split("_")[0]
            return (
                f"{line} {self.index[0]} sums to {self.value!r} "
                f"(off by {self.value - 1.0:+.3g})"
            )
        if self.rule == "entry_range":
            return f"entry {self.index} = {self.value!r} is outside [0, 1]"
        if self.rule == "negative":
            return f"entry {self.index[0]} = {self.value!r} is negative"
        return f"sums to {self.value!r} (off by {self.value - 1.0:+.3g})"

    def __str__(self) -> str:
        return f"{self.subject} {self.detail()}"

    def __repr__(self) -> str:
        return f"Violation({self.subject!r}, {self.rule!r}, {self.index!r}, {self.value!r})"


def check_matrix(matrix: StochasticMatrix, tolerance: float = USER_TOLERANCE) -> list[Violation]:
    violations = []
    values = matrix.values
    for i, j in zip(*np.nonzero((values < 0.0) | (values > 1.0))):
        violations.append(
            Violation(matrix.NAME, "entry_range", (int(i), int(j)), float(values[i, j]))
        )
    for line, total in enumerate(matrix.line_sums()):
        if abs(total - 1.0) > tolerance:
            violations.append(
                Violation(matrix.NAME, f"{matrix.LINE_NAME}_sum", (line,), float(total))
            )
    return violations


def check_distribution(
    name: str, values: np.ndarray, tolerance: float = USER_TOLERANCE
) -> list[Violation]:
    violations = [
        Violation(name, "negative", (int(i),), float(values[i]))
        for i in np.flatnonzero(values < 0.0)
    ]
    total = float(np.sum(values))
    if abs(total - 1.0) > tolerance:
        violations.append(Violation(name, "sum", None, total))
    return violations
