"""Exception types shared across the package."""


class ParameterError(ValueError):
    """An argument violates a documented precondition."""


class DomainError(ValueError):
    """A numeric argument lies outside the mathematical domain of an operation."""


class ModelError(ValueError):
    """A model definition is structurally unusable (e.g. disconnected graph)."""


class NumericError(ArithmeticError):
    """A numeric routine failed; carries the offending density level when known."""

    def __init__(self, message: str, level: float | None = None):
        super().__init__(message)
        self.level = level


class NonCoalescenceError(RuntimeError):
    """A coupling-from-the-past run exhausted its budget without coalescing.

    Raised instead of returning anything, so no biased state ever escapes.
    """
