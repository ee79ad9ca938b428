"""Exception types shared across the package."""


class FracineqError(Exception):
    """Base class for all errors raised by fracineq."""


class DomainError(FracineqError):
    """An argument lies outside the mathematical domain of an operation."""


class ParamError(FracineqError):
    """An inequality case violates one of its hypotheses.

    The message names the violated clause, e.g. ``"hardy: requires a > 0"``.
    """


class HypothesisError(FracineqError):
    """A grid function violates the boundary hypothesis of an inequality."""


class ParseError(FracineqError):
    """Expression text could not be parsed.

    Attributes:
        offset: byte offset of the offending token.
        expected: tuple of token descriptions that would have been accepted.
    """

    def __init__(self, message: str, offset: int, expected: tuple = ()):
        super().__init__(f"{message} at offset {offset}"
                         + (f" (expected {', '.join(expected)})" if expected else ""))
        self.offset = offset
        self.expected = tuple(expected)


class EvalError(FracineqError):
    """Expression evaluation hit a domain violation (log of non-positive, ...)."""


class ConvergenceError(FracineqError):
    """Adaptive quadrature failed to reach the requested tolerance."""


class SolveError(FracineqError):
    """A linear solve failed."""


class NumericError(FracineqError):
    """An internal computation produced a non-finite value."""
