"""Exception hierarchy shared by the library and the command line driver."""


class WaringError(Exception):
    """Base class for every error raised by :mod:`binwaring`."""


class InputError(WaringError, ValueError):
    """The caller supplied data outside an operation's preconditions."""


class InvariantViolation(WaringError, RuntimeError):
    """An internal consistency check failed.

    These indicate a bug (or a classically impossible situation), never bad input.
    """
