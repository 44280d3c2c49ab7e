"""Exception types shared across the package."""


class SicframeError(Exception):
    """Base class for all package-specific errors."""


class DimensionError(SicframeError):
    """Operands live in incompatible or invalid dimensions."""


class NormError(SicframeError):
    """A vector that must be unit norm is too far from unit norm."""


class CountError(SicframeError):
    """Wrong number of vectors for the requested quantity."""


class UnsupportedError(SicframeError):
    """Requested variant outside the supported set (e.g. frame potential order)."""


class UnsupportedDimensionError(SicframeError):
    """Construction not defined in this dimension (e.g. parity split in even dimension)."""


class UnsupportedSubspaceError(SicframeError):
    """Subspace label / dimension combination that cannot be built or averaged."""


class NotTabulatedError(SicframeError):
    """No closed form is tabulated for this case; use the exact average instead."""
