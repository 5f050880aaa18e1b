# common/errors.py


class MatrixInvariantsError(Exception):
    """Base class for every error raised by the toolkit."""


class NonExpandableError(MatrixInvariantsError, ValueError):
    """A denominator factor has zero constant term, so no power series expansion exists."""


class SingularMatrixError(MatrixInvariantsError, ValueError):
    pass


class GroupTooLargeError(MatrixInvariantsError, RuntimeError):
    """Closure produced more elements than the cap allows (the group is probably infinite)."""


class AsymmetricSeriesError(MatrixInvariantsError, ValueError):
    def __init__(self, exponents, left, right):
        self.exponents = exponents
        super().__init__(
            f"series is not symmetric: coefficient of t1^{exponents[0]} t2^{exponents[1]} is {left}, "
            f"but the swapped coefficient is {right}"
        )


class AlphabetError(MatrixInvariantsError, ValueError):
    pass


class ResourceCapError(MatrixInvariantsError, RuntimeError):
    pass


class GroupFileError(MatrixInvariantsError, ValueError):
    pass


class ConfigError(MatrixInvariantsError, ValueError):
    pass


class ConsistencyError(MatrixInvariantsError, RuntimeError):
    """Two independent computations of the same quantity disagree."""
