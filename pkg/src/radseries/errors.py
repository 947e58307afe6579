"""Exception types shared across the package."""


class RadseriesError(Exception):
    """Base class for all radseries errors."""


class OutOfRangeError(RadseriesError, ValueError):
    """An index or limit falls outside what a sieve/table can answer."""


class InvalidArgumentError(RadseriesError, ValueError):
    """An argument violates an operation's precondition."""


class InvalidParamsError(RadseriesError, ValueError):
    """(s, t) lies outside the region of convergence t > 0, s > 1 + t."""


class InvalidSpecError(RadseriesError, ValueError):
    """A multiplicative rule produced a non-positive value."""


class UnsupportedSpecError(RadseriesError, ValueError):
    """The requested operation needs spec data (closed-form Euler factor,
    growth bound) that the spec does not declare."""
