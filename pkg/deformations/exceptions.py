from app.exceptions import KodairaKitError


class NonIntegerResult(KodairaKitError):
    """h¹ - h² came out fractional; the input invariants are inconsistent."""


class A0NonzeroC1(KodairaKitError):
    """With a(S) = 0 the discriminant is empty, so c₁(E) must be numerically trivial."""


class OutOfHypotheses(KodairaKitError):
    pass


class InconsistentReport(KodairaKitError):
    pass
