"""Exception types shared across the engine."""


class CreditEqError(Exception):
    """Base class for engine errors."""


class InvalidConfigError(CreditEqError):
    """A scenario parameter violates its domain."""


class InvalidRateError(CreditEqError):
    """Rate outside [0, 1)."""


class UnpriceableError(CreditEqError):
    """No finite rate covers the given PD (p * LGD >= 1)."""


class InternalError(CreditEqError):
    """Bookkeeping invariant broken; indicates a bug."""
