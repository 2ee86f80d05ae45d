"""Exception hierarchy shared by the library and the CLI exit-code mapping."""


class NGError(Exception):
    """Base class for all errors raised by ngrings."""


class InputError(NGError, ValueError):
    """Malformed or inconsistent input (dimension mismatch, bad file, ...)."""


class PreconditionError(InputError):
    """An operation was called outside the hypotheses it is valid under."""


class UnsupportedCaseError(PreconditionError):
    """The requested case is handled by a different route (e.g. n = 2 edge rings)."""


class ResourceError(NGError, RuntimeError):
    """A search would exceed a configured size cap, or found nothing within its bound."""

    def __init__(self, message: str, cap: int | None = None):
        super().__init__(message)
        self.cap = cap
