"""Exception types shared across the package."""


class InvalidInputError(ValueError):
    """An argument violates a documented precondition."""


class UnsupportedScaleError(ValueError):
    """The request is well formed but outside the supported problem size."""


class FamilyFormatError(ValueError):
    """A family file is malformed (bad JSON, duplicates, out-of-range elements)."""


class InvariantError(RuntimeError):
    """An internal consistency check failed.  Always a bug if raised."""
