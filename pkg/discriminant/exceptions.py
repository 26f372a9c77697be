from app.exceptions import KodairaKitError
from fibers.exceptions import CensusViolation, MuOutOfRange  # noqa: F401


class NotMinimal(KodairaKitError):
    pass


class PropertyPFails(KodairaKitError):
    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class ExcludedCaseEncountered(KodairaKitError):
    """A contraction whose (μ, ε) contradicts property (P) on an elliptic surface."""

    def __init__(self, message, components=(), case=None):
        self.components = tuple(components)
        self.case = case
        super().__init__(message)


class ChainBroken(KodairaKitError):
    pass


class InsufficientLocalData(KodairaKitError):
    pass


class NotAlgebraicDimensionZero(KodairaKitError):
    pass


class NotAlgebraicDimensionOne(KodairaKitError):
    pass


class InconsistentContext(KodairaKitError):
    pass
