"""
h¹(T_X) - h²(T_X) for a conic bundle X → S with S a compact Kähler surface
of algebraic dimension < 2, and when it is guaranteed to be positive.

    h¹ - h² = h⁰ + (c₂(E) - c₁(E)c₁(S) - 4/3 c₁²(S)) - 2/3 c₁²(S) + 7χ(𝒪_S)

Everything is exact; c₁(E)c₁(S) = -c₁(E)·K and c₁²(S) = K².
"""
import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Tuple

from chern.exceptions import ResidualNonzero, UnsupportedRank
from chern.services import euler_characteristic_T_X, evaluate
from deformations.exceptions import A0NonzeroC1, NonIntegerResult, OutOfHypotheses
from deformations.report import DeformationReport, Verdict
from surfaces.invariants import BundleInvariants, SurfaceModel

logger = logging.getLogger(__name__)

H1_NONZERO_NOTE = 'H¹(T_X) ≠ 0 regardless of the count: X always deforms nontrivially'
TORUS_NOTE = (
    'S is numerically a torus and E is numerically consistent with projectively flat; '
    'X is not the projectivization of a rank-2 bundle'
)
ELLIPTIC_NOTE = (
    'S is numerically a minimal properly elliptic surface with c₂ = 0; '
    'equality needs every singular fiber to be a multiple of a smooth elliptic curve'
)


def _check_rank(bundle: BundleInvariants):
    if bundle.rank != 3:
        raise UnsupportedRank(f"Conic bundles come from rank-3 bundles, got rank {bundle.rank}")


def h1_minus_h2(surface: SurfaceModel, bundle: BundleInvariants, h0: int) -> int:
    _check_rank(bundle)
    if h0 < 0:
        raise OutOfHypotheses(f"h⁰(T_X) must be nonnegative, got {h0}")
    k_squared = Fraction(surface.k_squared)
    value = (
        h0
        + (bundle.c2 - bundle.c1_dot_c1S - Fraction(4, 3) * k_squared)
        - Fraction(2, 3) * k_squared
        + 7 * surface.chi_O
    )
    if value.denominator != 1:
        raise NonIntegerResult(f"h¹ - h² = {value} is not an integer")
    return int(value)


def banlep_check(bundle: BundleInvariants) -> Tuple[Fraction, bool]:
    """(c₂(E) - c₁²(E)/3, whether it is ≥ 0)."""
    value = bundle.c2 - Fraction(bundle.c1_sq, 3)
    return value, value >= 0


def chern_gap(surface: SurfaceModel, bundle: BundleInvariants) -> int:
    """c₁²(E) - 3c₁(E)c₁(S) - 4c₁²(S)."""
    if surface.alg_dim == 0 and (bundle.c1_sq or bundle.c1_dot_K):
        raise A0NonzeroC1(
            f"a(S) = 0 forces c₁(E) ≡ 0, got c₁² = {bundle.c1_sq}, c₁·K = {bundle.c1_dot_K}"
        )
    return bundle.c1_sq - 3 * bundle.c1_dot_c1S - 4 * surface.k_squared


def decomposition_witness(surface: SurfaceModel, bundle: BundleInvariants, h0: int) -> Fraction:
    """h⁰ + [c₂ - c₁²/3] + gap/3 - 2/3 K² + 7χ: every bracket is ≥ 0 under the hypotheses."""
    banlep, _ = banlep_check(bundle)
    return (
        h0 + banlep + Fraction(chern_gap(surface, bundle), 3)
        - Fraction(2, 3) * surface.k_squared + 7 * surface.chi_O
    )


def vanishings(surface: SurfaceModel, bundle: BundleInvariants) -> Dict[str, bool]:
    return {
        'c1_sq(S)': surface.k_squared == 0,
        'c2(S)': surface.c2 == 0,
        'c1_sq(E)': bundle.c1_sq == 0,
        'c2(E)': bundle.c2 == 0,
    }


@lru_cache(maxsize=None)
def _symbolic_chi():
    return euler_characteristic_T_X()


def _check_hypotheses(surface: SurfaceModel, relative_picard_one: bool):
    if surface.alg_dim == 2:
        raise OutOfHypotheses("S is algebraic; the count needs algebraic dimension 0 or 1")
    if not surface.kaehler:
        raise OutOfHypotheses("S is not Kähler")
    if not relative_picard_one:
        raise OutOfHypotheses("X → S must have relative Picard number 1")


def classify(surface: SurfaceModel, bundle: BundleInvariants, h0: int,
             relative_picard_one: bool = True) -> DeformationReport:
    _check_hypotheses(surface, relative_picard_one)
    value = h1_minus_h2(surface, bundle, h0)
    banlep, banlep_ok = banlep_check(bundle)
    gap = chern_gap(surface, bundle)
    witness = decomposition_witness(surface, bundle, h0)
    if witness != value:
        raise ResidualNonzero(f"Decomposition gives {witness}, the count gives {value}")

    symbolic = h0 - evaluate(_symbolic_chi(), surface, bundle)
    if symbolic != value:
        logger.error(f"h⁰ - χ(T_X) = {symbolic} disagrees with h¹ - h² = {value}")
        raise ResidualNonzero(f"h⁰ - χ(T_X) = {symbolic} but h¹ - h² = {value}")

    notes = [H1_NONZERO_NOTE]
    if not banlep_ok:
        notes.append(f'c₂(E) - c₁²(E)/3 = {banlep} < 0: impossible for a bundle on a Kähler surface')
    if gap < 0:
        notes.append(f'c₁²(E) - 3c₁(E)c₁(S) - 4c₁²(S) = {gap} < 0: contradicts the discriminant inequality')
    flags = vanishings(surface, bundle)

    if value > 0:
        verdict = Verdict.POSITIVE_STRICT
    elif value == 0 and all(flags.values()):
        if surface.kodaira_dim == 0:
            verdict = Verdict.EXCEPTIONAL_CASE_I
            notes.append(TORUS_NOTE)
        elif surface.kodaira_dim == 1 and surface.minimal:
            verdict = Verdict.EXCEPTIONAL_CASE_II
            notes.append(ELLIPTIC_NOTE)
        else:
            verdict = Verdict.NONNEG_WITH_EQUALITY_CONDITIONS
            notes.append('h¹ = h² is numerically possible: h⁰(T_X) = 0 and all four Chern numbers vanish')
    else:
        verdict = Verdict.OUT_OF_HYPOTHESES
        failing = ', '.join(name for name, ok in flags.items() if not ok)
        notes.append(
            f'h¹ - h² = {value} is impossible under the hypotheses'
            + (f' ({failing} nonzero)' if failing else '')
            + '; the invariants are inconsistent'
        )
        logger.warning(f"Inconsistent invariants: h¹ - h² = {value}, c₂ - c₁²/3 = {banlep}, gap {gap}")

    report = DeformationReport(
        h0=h0,
        h1_minus_h2=value,
        banlep_lhs=banlep,
        banlep_ok=banlep_ok,
        chern_gap=gap,
        witness=witness,
        vanishings=flags,
        verdict=verdict,
        notes=notes,
    )
    logger.info(f"Deformation count {value}: {verdict.value}")
    return report
