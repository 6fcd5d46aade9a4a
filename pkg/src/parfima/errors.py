"""Exception types shared across the package."""


class ParfimaError(Exception):
    """Base class for every error raised by this package."""


class ParameterError(ParfimaError, ValueError):
    """Model parameters are malformed or outside the required region."""


class DomainError(ParfimaError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class PoleError(DomainError):
    """Evaluation would hit a gamma-function pole or a reflection pole."""


class InsufficientDataError(ParfimaError, ValueError):
    """The sample is too short for the requested estimate."""
