"""Exception types shared across the package."""


class DomainError(Exception):
    """Raised when an operation is called with arguments that violate its contract."""


class PlanError(Exception):
    """Raised when the privileged planner cannot produce a valid plan."""


class TrainingError(Exception):
    """Raised when a training step becomes numerically invalid (NaN/inf loss)."""


class ParseError(Exception):
    """Raised for malformed trajectory files; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"{message} (line {line})"
        super().__init__(message)
        self.line = line
