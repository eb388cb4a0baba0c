"""Exception hierarchy shared by all bggkit modules.

DomainError covers bad user input (CLI exit code 1), UsageError covers
malformed invocations (exit code 2), and ConsistencyError signals an
internal cross-check failure that should never happen on valid input
(exit code 3).
"""


class BGGKitError(Exception):
    """Base class for all bggkit errors."""


class DomainError(BGGKitError):
    """Input is well-formed but outside the mathematical domain."""


class NotFiniteTypeError(DomainError):
    """Root closure did not terminate below the height bound."""


class NotARootError(DomainError):
    """A vector was used as a root but is not in the root system."""


class DepthOverflowError(DomainError):
    """A module computation left the truncated weight range."""


class UsageError(BGGKitError):
    """Malformed invocation (bad flag syntax, unparseable value)."""


class ConsistencyError(BGGKitError):
    """An internal invariant failed; indicates a bug, not bad input."""
