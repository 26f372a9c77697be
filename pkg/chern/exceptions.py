from app.exceptions import KodairaKitError


class UnsupportedRank(KodairaKitError):
    pass


class NormalFormFailure(KodairaKitError):
    """Rewriting did not reach a normal form within the configured number of passes."""


class ResidualNonzero(KodairaKitError):
    """χ(T_X) disagrees with the h¹ - h² formula; carries the offending monomials."""

    def __init__(self, message, monomials=None):
        self.monomials = dict(monomials or {})
        super().__init__(message)


class DegreeMismatch(KodairaKitError):
    pass
