from app.exceptions import KodairaKitError


class UnknownType(KodairaKitError):
    """Fiber kind or parameter outside the catalog."""


class CatalogError(KodairaKitError):
    """A catalog entry whose fiber class is not numerically trivial on its components."""


class MuOutOfRange(KodairaKitError):
    """Point multiplicity above 3 for a reduced curve in an elliptic context."""


class CensusViolation(KodairaKitError):
    pass
