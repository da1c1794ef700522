"""Exception hierarchy shared across the package."""


class FpscaleError(Exception):
    """Base class for all package errors."""


class SizeError(FpscaleError):
    """Input has too few elements for the requested computation."""


class DataError(FpscaleError):
    """Input values are unusable (non-finite, unparseable, wrong shape)."""


class ArgumentError(FpscaleError):
    """A parameter is outside its documented domain."""


class DegenerateError(FpscaleError):
    """A computation is undefined because the data carry no spread."""


class DegenerateSampleError(DegenerateError):
    """Sample-side degeneracy (zero jackknife variance, zero sigma1)."""


class DegenerateAuxError(DegenerateError):
    """Auxiliary variable is constant and cannot calibrate anything."""


class NumericalError(FpscaleError):
    """A numerical procedure failed beyond recoverable round-off."""
