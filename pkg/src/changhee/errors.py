"""Exception hierarchy shared by the exact, p-adic and analytic engines."""


class QEulerError(Exception):
    """Base class for every error raised by this package."""


class DomainError(QEulerError, ValueError):
    pass


class SingularSeriesError(QEulerError, ZeroDivisionError):
    pass


class SingularSpecError(QEulerError, ValueError):
    """A generating-function denominator vanishes at t = 0."""


class InvalidCharacterError(QEulerError, ValueError):
    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class WrongPipelineError(QEulerError, TypeError):
    """A complex-valued character was handed to the exact engine."""


class NonUnitDenominatorError(QEulerError, ValueError):
    pass


class NotStabilizedError(QEulerError, RuntimeError):
    def __init__(self, message, last_residues=None):
        super().__init__(message)
        self.last_residues = last_residues


class DivergenceError(QEulerError, ValueError):
    pass
