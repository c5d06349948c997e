"""Exception types shared across the package."""


class DepthLabError(Exception):
    """Base class for all package errors."""


class InvalidInputError(DepthLabError, ValueError):
    """Input violates a documented precondition."""


class CapacityError(DepthLabError):
    """Input exceeds the size limit of an exact solver."""
