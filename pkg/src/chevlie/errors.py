"""Exception types shared across the package."""


class ChevlieError(Exception):
    """Base class for all package-specific errors."""


class InvalidLieTypeError(ChevlieError, ValueError):
    """Family/rank combination outside the simple-type bounds."""


class NotARootError(ChevlieError, ValueError):
    """A coefficient vector that is not a root was passed where a root is required."""


class NodeError(ChevlieError, ValueError):
    """Invalid extended-diagram node selector."""


class PrimeConditionError(ChevlieError, ValueError):
    """A prime violates the hypothesis of the requested computation."""


class UnsupportedOperationError(ChevlieError, RuntimeError):
    """The requested labelling is not defined for this input class."""


class InternalConsistencyError(ChevlieError, RuntimeError):
    """An internal invariant that should hold for every valid input failed."""
