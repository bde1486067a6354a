"""Exceptions shared across the package."""


class WreathmarksError(Exception):
    """Base class for all package errors."""


class GroupSpecError(WreathmarksError):
    """Malformed group specification (bad cycle notation, unknown catalog name)."""


class CapExceeded(WreathmarksError):
    """A configured size cap (element enumeration or subgroup enumeration) was hit."""

    def __init__(self, what: str, needed: int, cap: int):
        self.what = what
        self.needed = needed
        self.cap = cap
        super().__init__(f"{what}: needs {needed}, cap is {cap}")


class NotInImage(WreathmarksError):
    """A rational solve succeeded but the solution is not integral.

    Raised by from_marks / from_parks when the input vector is not the
    character of a virtual element.
    """


class FWIntegralityError(NotInImage):
    """The Frobenius-Wielandt pullback failed to land integrally.

    This would contradict a theorem we rely on, so it signals an
    implementation bug rather than bad input; surfaced loudly.
    """
