"""Exception hierarchy shared by every module.

The CLI maps these onto exit codes: :class:`InputError` -> 2,
:class:`CapExceeded` -> 3.  Everything else that escapes is a bug.
"""


class WeiError(Exception):
    """Base class for all library errors."""


class InputError(WeiError, ValueError):
    """Malformed or out-of-contract input data."""


class CapExceeded(WeiError):
    """An enumeration would exceed the configured object cap."""

    def __init__(self, what, needed, cap):
        super().__init__(f"{what}: {needed} objects exceeds cap {cap}")
        self.what = what
        self.needed = needed
        self.cap = cap


class HypothesisViolation(InputError):
    """A precondition of a construction does not hold.

    ``condition`` is a short machine-readable tag and ``witness`` the
    smallest offending tuple, when there is one.
    """

    def __init__(self, message, condition=None, witness=None):
        super().__init__(message)
        self.condition = condition
        self.witness = witness


class ConsistencyError(WeiError, AssertionError):
    """Two independent computations of the same quantity disagree."""


DEFAULT_CAP = 100_000
