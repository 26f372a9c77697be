from app.exceptions import KodairaKitError


class ComponentNotInDivisor(KodairaKitError):
    pass


class UnsupportedLocalType(KodairaKitError):
    pass


class NotMinusOneCurve(KodairaKitError):
    pass


class BadEpsilon(KodairaKitError):
    pass


class UnknownCurve(KodairaKitError):
    pass


class InvalidConfiguration(KodairaKitError):
    """Raised when an operation receives a configuration that fails validate()."""

    def __init__(self, violations):
        self.violations = list(violations)
        summary = '; '.join(f"{v.kind}: {v.detail}" for v in self.violations[:5])
        super().__init__(f"Invalid configuration ({len(self.violations)} violations): {summary}")


class BadMultiplicity(KodairaKitError):
    pass


class UnknownGenus(KodairaKitError):
    """A curve that is neither smooth rational nor tagged with its arithmetic genus."""
