"""Exception hierarchy shared by every module."""


class SimdimError(Exception):
    """Base class for all library errors."""


class InvalidParameter(SimdimError, ValueError):
    pass


class CapacityExceeded(SimdimError):
    """A construction would exceed the 64-vertex word capacity."""


class UnsupportedMetric(SimdimError):
    """The full geodesic metric was requested on a disconnected graph."""


class BudgetExceeded(SimdimError):
    """An exact search needed more candidate checks than allowed."""


class HypothesisNotMet(SimdimError):
    """A theorem's premises could not be certified for the given input."""


class ParseError(SimdimError):
    def __init__(self, message, line=None, source=None):
        self.line = line
        self.source = source
        where = ""
        if source is not None:
            where += f"{source}:"
        if line is not None:
            where += f"{line}: "
        elif where:
            where += " "
        super().__init__(where + message)
