"""
Validated constructors and the classical numerical formulas on surfaces:
Noether, Riemann-Roch for line bundles, and the intersection pairing.
"""
import logging

from surfaces.exceptions import (
    DimensionMismatch,
    InvalidSurface,
    KodairaDimensionMismatch,
    MissingExceptionalCurve,
    NoetherViolation,
    NonAlgebraicPositivity,
    ParityViolation,
)
from surfaces.invariants import DivisorClass, IntersectionForm, SurfaceModel

logger = logging.getLogger(__name__)


def make_surface(k_squared: int, c2: int, picard_rank: int, alg_dim: int,
                 kodaira_dim: int, minimal: bool, kaehler: bool) -> SurfaceModel:
    """
    Build a SurfaceModel with χ(𝒪) derived from Noether's formula.

    Raises:
        NoetherViolation: K² + c₂ not divisible by 12
        NonAlgebraicPositivity: Kähler with a(S) < 2 but K² > 0 or χ(𝒪) < 0
        KodairaDimensionMismatch: κ(S) > a(S)
        MissingExceptionalCurve: not minimal but ρ = 0
        InvalidSurface: a field outside its range
    """
    if alg_dim not in (0, 1, 2):
        raise InvalidSurface(f"alg_dim must be 0, 1 or 2, got {alg_dim}")
    if kodaira_dim not in (-1, 0, 1, 2):
        raise InvalidSurface(f"kodaira_dim must be -1, 0, 1 or 2, got {kodaira_dim}")
    if picard_rank < 0:
        raise InvalidSurface(f"picard_rank must be nonnegative, got {picard_rank}")
    if kodaira_dim > alg_dim:
        raise KodairaDimensionMismatch(f"κ = {kodaira_dim} exceeds the algebraic dimension {alg_dim}")
    if not minimal and picard_rank < 1:
        raise MissingExceptionalCurve("A non-minimal surface carries a (-1)-curve, so ρ ≥ 1")

    total = k_squared + c2
    if total % 12:
        raise NoetherViolation(f"K² + c₂ = {total} is not divisible by 12")
    chi_O = total // 12

    if kaehler and alg_dim < 2 and (k_squared > 0 or chi_O < 0):
        raise NonAlgebraicPositivity(
            f"Non-algebraic Kähler surface needs K² ≤ 0 and χ(𝒪) ≥ 0, "
            f"got K² = {k_squared}, χ(𝒪) = {chi_O}"
        )

    return SurfaceModel(
        k_squared=k_squared,
        c2=c2,
        chi_O=chi_O,
        picard_rank=picard_rank,
        alg_dim=alg_dim,
        kodaira_dim=kodaira_dim,
        minimal=bool(minimal),
        kaehler=bool(kaehler),
    )


def riemann_roch_line(surface: SurfaceModel, L_sq: int, L_dot_K: int) -> int:
    """χ(L) = χ(𝒪) + (L² - L·K)/2."""
    numerator = L_sq - L_dot_K
    if numerator % 2:
        raise ParityViolation(f"L² - L·K = {numerator} is odd")
    return surface.chi_O + numerator // 2


def intersect(a: DivisorClass, b: DivisorClass, form: IntersectionForm) -> int:
    if len(a) != form.rank or len(b) != form.rank:
        raise DimensionMismatch(
            f"Classes of length {len(a)} and {len(b)} against a rank-{form.rank} form"
        )
    product = a.as_column().T * form.matrix * b.as_column()
    return int(product[0, 0])


def inequality_value(surface: SurfaceModel, D_sq: int, D_dot_K: int) -> int:
    """Left-hand side of D·(D - 3K) - 4K² ≥ 0."""
    return D_sq - 3 * D_dot_K - 4 * surface.k_squared
