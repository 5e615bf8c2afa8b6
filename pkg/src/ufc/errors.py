"""Exception hierarchy shared by every module of the package."""


class AutomatonError(ValueError):
    """Base class for all errors raised by ufc."""


class AlphabetError(AutomatonError):
    """Malformed alphabet, foreign letter, or mismatched operand alphabets."""


class CapacityError(AutomatonError):
    """A construction would exceed a configured size limit."""


class PreconditionError(AutomatonError):
    """An operation was called on an input it is not defined for."""


class FormatError(AutomatonError):
    """Malformed interchange data or transformation text."""
