"""Exception hierarchy shared by the library and the command line."""


class CubicE6Error(Exception):
    """Base class for every error raised by this package."""


class InputError(CubicE6Error, ValueError):
    """The caller supplied something outside an operation's domain."""


class ConfigError(InputError):
    """A singularity configuration label could not be parsed or embedded."""


class InvariantViolation(CubicE6Error, RuntimeError):
    """An internal consistency check failed; this indicates a bug or an
    unproven assumption that did not hold."""
