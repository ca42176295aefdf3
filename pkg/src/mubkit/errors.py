"""Exception types shared across the package."""


class MubkitError(Exception):
    """Base class for every error raised by this package."""


class StructuralError(MubkitError):
    """Malformed value: wrong dimensions, bad coefficients, mixed parameters."""


class DomainError(MubkitError):
    """Operation applied outside its mathematical domain."""


class UnsupportedRouteError(MubkitError):
    """Construction route incompatible with the field characteristic."""


class CapacityError(MubkitError):
    """Requested size exceeds the configured resource cap."""


class ParseError(MubkitError):
    """A file could not be parsed; the message carries position details."""
