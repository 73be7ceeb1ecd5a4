class UsageError(ValueError):
    """Bad input: malformed data, mismatched lengths, infeasible region, ..."""


class InvariantViolation(AssertionError):
    """Two routes that must agree did not; carries the offending context."""

    def __init__(self, message: str, **context):
        super().__init__(message)
        self.context = context
