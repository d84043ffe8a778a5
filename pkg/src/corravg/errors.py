"""Exception hierarchy. All errors are ``ValueError`` subclasses."""


class CorravgError(ValueError):
    """Base class for every error raised by this package."""


class InvalidArgument(CorravgError):
    pass


class OutOfRange(CorravgError):
    """A lag, length or position falls outside the sampled range 1..3N."""


class FunctionFormatError(CorravgError):
    """A function file could not be parsed.

    ``row`` is the 1-based line number of the offending line, or ``None``
    when the problem concerns the file as a whole.
    """

    def __init__(self, message, row=None):
        if row is not None:
            message = f"line {row}: {message}"
        super().__init__(message)
        self.row = row


class ExponentDomainError(CorravgError):
    pass


class FitError(CorravgError):
    pass
