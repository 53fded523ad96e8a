"""Exception types raised by lassotrig."""


class LassoTrigError(Exception):
    """Base class for all package errors."""


class InvalidArgument(LassoTrigError, ValueError):
    pass


class IncompatibleLayout(LassoTrigError, ValueError):
    """Two coefficient layouts (degree, node count, top-mode halving) differ."""


class DomainError(LassoTrigError, ArithmeticError):
    """A computable bound has a negative radicand or similar."""


class ConvergenceFailure(LassoTrigError, RuntimeError):
    """Iterative solver did not converge; ``last_iterate`` holds its final state."""

    def __init__(self, message, last_iterate=None):
        super().__init__(message)
        self.last_iterate = last_iterate


class CsvParseError(LassoTrigError, ValueError):
    def __init__(self, message, line=None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class GridMismatch(LassoTrigError, ValueError):
    """x-column of a samples file does not lie on the equidistant grid."""

    def __init__(self, message, index, deviation):
        super().__init__(message)
        self.index = index
        self.deviation = deviation
