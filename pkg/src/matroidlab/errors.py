"""Exception types shared across the package."""
import os


class MatroidLabError(Exception):
    pass


class UniverseMismatch(MatroidLabError, ValueError):
    pass


class MalformedSpec(MatroidLabError, ValueError):
    pass


class CapExceeded(MatroidLabError):
    pass


class LoopError(MatroidLabError, ValueError):
    """Raised when a coloring quantity is asked of a matroid with a loop."""


class ProtocolViolation(MatroidLabError):
    pass


class InfeasibleLists(MatroidLabError):
    def __init__(self, msg, violating_set=None):
        super().__init__(msg)
        self.violating_set = violating_set


class DivisibilityError(MatroidLabError, ValueError):
    pass


def enum_cap(default=20):
    """Subset-enumeration cap; MATROIDLAB_MAX_ENUM overrides the default."""
    v = os.environ.get("MATROIDLAB_MAX_ENUM")
    if v:
        try:
            return int(v)
        except ValueError:
            pass
    return default


class NoLegalMove(MatroidLabError):
    pass
