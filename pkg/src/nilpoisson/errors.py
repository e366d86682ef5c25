"""Exception hierarchy shared by the whole package."""


class NilpoissonError(Exception):
    """Base class for package errors."""


class ValidationError(NilpoissonError):
    """The input algebra or structure fails a validity requirement."""


class NotAbelianError(ValidationError):
    """An operation requiring an abelian complex structure got a non-abelian one."""


class UsageError(NilpoissonError):
    """Bad arguments, expressions, or file contents."""


class InternalInvariantError(NilpoissonError):
    """A mathematical identity the engine guarantees failed; always a bug."""
