"""Exception types shared across the package."""


class CayleyForgeError(Exception):
    """Base class for all errors raised by cayley_forge."""


class InvalidParameterError(CayleyForgeError, ValueError):
    """A numeric parameter is outside its allowed range."""


class PreconditionError(CayleyForgeError, ValueError):
    """An input violates a documented precondition.

    ``witness`` carries whatever data demonstrates the violation
    (an offending element, a pair of elements, a vertex...).
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ResourceLimitError(CayleyForgeError, RuntimeError):
    """The requested object would exceed a configured size cap."""
