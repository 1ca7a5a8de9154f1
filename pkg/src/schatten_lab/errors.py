"""Exception hierarchy shared by every module."""


class SchattenLabError(Exception):
    pass


class ShapeError(SchattenLabError, ValueError):
    """Operand dimensions are incompatible."""


class DomainError(SchattenLabError, ValueError):
    """Input lies outside the mathematical domain of the operation."""


class PreconditionError(SchattenLabError, ValueError):
    """An inequality's hypothesis does not hold for the supplied instance."""


class ParameterError(SchattenLabError, ValueError):
    """A generator or search parameter is out of range."""


class ConvergenceError(SchattenLabError, ArithmeticError):
    pass


class ParseError(SchattenLabError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InequalityViolation(SchattenLabError, AssertionError):
    """Raised by the tightness search when a visited instance breaks a bound."""

    def __init__(self, message, report=None, instance=None):
        super().__init__(message)
        self.report = report
        self.instance = instance
