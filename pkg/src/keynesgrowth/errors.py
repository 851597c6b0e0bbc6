"""Exception hierarchy.

Errors split into two families so that front ends can tell bad input
(``ValidationError``) apart from a numerical procedure that could not
complete (``NumericError``).
"""


class ModelError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(ModelError, ValueError):
    """Input data or parameters violate a stated precondition."""


class NumericError(ModelError, ArithmeticError):
    """A numerical procedure failed on otherwise valid input."""


class DomainError(ValidationError):
    """Argument outside the domain of a model function (e.g. ``kd <= 0``)."""


class LoadError(ValidationError):
    """A CSV file could not be turned into a valid series.

    ``row`` is the calendar year (or line number) and ``column`` the column
    name involved, when known.
    """

    def __init__(self, message, row=None, column=None):
        super().__init__(message)
        self.row = row
        self.column = column


class AlignmentError(ValidationError):
    """Two series that must share a year index do not."""


class NoSteadyStateError(NumericError):
    """The reduced-form dynamics have no positive fixed point."""


class NoSolutionError(NumericError):
    """The capital-demand condition has no positive root."""


class IntegrationError(NumericError):
    """The ODE integrator produced a non-positive state."""

    def __init__(self, message, time=None):
        super().__init__(message)
        self.time = time


class SingularityError(NumericError):
    """A denominator in the unemployment-growth formula vanished."""


class SingularDesignError(NumericError):
    """The regression design matrix is rank deficient."""

    def __init__(self, message, column=None):
        super().__init__(message)
        self.column = column


class UndefinedProductError(NumericError):
    """The structural product is undefined because the slope is zero."""


class SignWarning(UserWarning):
    """An estimate has the opposite sign from the one the model predicts."""
