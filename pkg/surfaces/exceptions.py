from app.exceptions import KodairaKitError


class NoetherViolation(KodairaKitError):
    """K² + c₂ is not divisible by 12."""


class NonAlgebraicPositivity(KodairaKitError):
    """A non-algebraic Kähler surface with K² > 0 or χ(𝒪) < 0."""


class ParityViolation(KodairaKitError):
    pass


class DimensionMismatch(KodairaKitError):
    pass


class InvalidSurface(KodairaKitError):
    """Field outside its admissible range."""


class KodairaDimensionMismatch(KodairaKitError):
    """κ(S) > a(S); surfaces of general type are algebraic."""


class MissingExceptionalCurve(KodairaKitError):
    """A non-minimal model whose Néron-Severi group has no room for a (-1)-curve."""
