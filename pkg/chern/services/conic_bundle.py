"""
The conic bundle X ⊂ ℙ(E) cut out by [X] = 2ξ - e₁ over a surface S.

Tangent bundles come from the relative Euler sequence
0 → 𝒪 → π*E* ⊗ 𝒪(1) → T_{ℙ(E)/S} → 0 and the normal sequence of X in ℙ(E).
Integrals over ℙ(E) and X are pushed forward to formal surface classes in
c₁², c₂, e₁c₁, e₁², e₂.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Tuple

from chern.exceptions import DegreeMismatch, ResidualNonzero
from chern.ring import GradedRing, RingElement, projective_bundle_ring, surface_ring
from chern.services.characteristic import (
    chern_character,
    chern_components,
    dual,
    exponential,
    inverse,
    todd_class,
    twist,
)
from surfaces.invariants import BundleInvariants, SurfaceModel

logger = logging.getLogger(__name__)

THREEFOLD_DEGREE = 3
FOURFOLD_DEGREE = 4


def _ring(ring: Optional[GradedRing]) -> GradedRing:
    return projective_bundle_ring(3) if ring is None else ring


def bundle_chern(ring: GradedRing) -> RingElement:
    """c(E) = 1 + e₁ + e₂ + e₃."""
    return ring.element('1 + e1 + e2 + e3')


def surface_tangent_chern(ring: GradedRing) -> RingElement:
    """c(T_S) = 1 + c₁ + c₂."""
    return ring.element('1 + c1 + c2')


def conic_class(ring: GradedRing) -> RingElement:
    return ring.element('2*xi - e1')


def relative_tangent_chern(ring: Optional[GradedRing] = None) -> RingElement:
    """c(T_{ℙ(E)/S}) = c(E* ⊗ 𝒪(1))."""
    ring = _ring(ring)
    return twist(dual(bundle_chern(ring)), 3, ring.gen('xi'))


def relative_tangent_character(ring: Optional[GradedRing] = None) -> RingElement:
    """ch(T_{ℙ(E)/S}) = ch(E*)·e^ξ - 1."""
    ring = _ring(ring)
    return chern_character(dual(bundle_chern(ring)), 3) * exponential(ring.gen('xi')) - 1


def projective_bundle_tangent_chern(ring: Optional[GradedRing] = None) -> RingElement:
    ring = _ring(ring)
    return relative_tangent_chern(ring) * surface_tangent_chern(ring)


def conic_bundle_tangent(ring: Optional[GradedRing] = None) -> RingElement:
    """ch(T_X) = ch(T_{ℙ(E)/S}) + π*ch(T_S) - ch(𝒪(X)), restricted to X."""
    ring = _ring(ring)
    character = (
        relative_tangent_character(ring)
        + chern_character(surface_tangent_chern(ring), 2)
        - exponential(conic_class(ring))
    )
    return character.truncated(THREEFOLD_DEGREE)


def conic_bundle_tangent_chern(ring: Optional[GradedRing] = None) -> RingElement:
    """c(T_X) = c(T_{ℙ(E)/S})·π*c(T_S)/(1 + X)."""
    ring = _ring(ring)
    total = projective_bundle_tangent_chern(ring) * inverse(ring.one() + conic_class(ring))
    return total.truncated(THREEFOLD_DEGREE)


def _xi_square_part(element: RingElement) -> Dict[Tuple[Tuple[str, int], ...], Fraction]:
    """Base monomials multiplying ξ², without any truncation."""
    ring = element.ring
    if not ring.has_generator('xi'):
        raise DegreeMismatch(f"{ring.name} has no relative hyperplane class")
    names = [name for name, _ in ring.generators]
    xi = names.index('xi')
    part = {}
    for monom, coeff in element.monomials():
        if monom[xi] != 2:
            continue
        key = tuple((name, e) for i, (name, e) in enumerate(zip(names, monom)) if i != xi and e)
        part[key] = part.get(key, Fraction(0)) + coeff
    return part


def pushforward_to_S(element: RingElement) -> RingElement:
    """π_*: reads the ξ² coefficient of a normal form (∫ over a fiber of ξ² is 1)."""
    return surface_ring().from_terms(_xi_square_part(element))


def integrate_over_P(element: RingElement) -> RingElement:
    if element.ring.truncation_degree < FOURFOLD_DEGREE:
        raise DegreeMismatch(f"{element.ring.name} is truncated below the dimension of ℙ(E)")
    return pushforward_to_S(element.homogeneous(FOURFOLD_DEGREE))


def integrate_over_X(cls: RingElement) -> RingElement:
    """∫_X β = π_*(β·[X]) on the degree-3 part of β."""
    product = cls.homogeneous(THREEFOLD_DEGREE) * conic_class(cls.ring)
    return integrate_over_P(product)


def integrate_over_S(element: RingElement) -> RingElement:
    return element.homogeneous(2)


def todd_integral_S() -> RingElement:
    """∫_S td(T_S) = (c₁² + c₂)/12."""
    ring = surface_ring()
    return integrate_over_S(todd_class(surface_tangent_chern(ring), 2))


def chi_structure_sheaf_P(ring: Optional[GradedRing] = None) -> RingElement:
    """χ(𝒪_{ℙ(E)}) by Hirzebruch-Riemann-Roch."""
    ring = _ring(ring)
    return integrate_over_P(todd_class(projective_bundle_tangent_chern(ring), FOURFOLD_DEGREE))


def chi_structure_sheaf_X(ring: Optional[GradedRing] = None) -> RingElement:
    ring = _ring(ring)
    return integrate_over_X(todd_class(conic_bundle_tangent_chern(ring), THREEFOLD_DEGREE))


def euler_characteristic_T_X(ring: Optional[GradedRing] = None) -> RingElement:
    """χ(T_X) = ∫_X ch(T_X)·td(T_X)."""
    ring = _ring(ring)
    integrand = conic_bundle_tangent(ring) * todd_class(conic_bundle_tangent_chern(ring), THREEFOLD_DEGREE)
    return integrate_over_X(integrand)


def riero_target() -> RingElement:
    """c₂(E) - c₁(E)c₁(S) - 2c₁²(S) + 7χ(𝒪_S)."""
    ring = surface_ring()
    return ring.element('e2 - e1*c1 - 2*c1**2') + todd_integral_S() * 7


def bogomolov_form() -> RingElement:
    """c₂(E) - c₁²(E)/3."""
    return surface_ring().element('e2 - e1**2/3')


def threefold_numbers(ring: Optional[GradedRing] = None) -> Dict[str, RingElement]:
    """∫_X c₁³, ∫_X c₁c₂ and the topological Euler number ∫_X c₃ of T_X."""
    ring = _ring(ring)
    c = chern_components(conic_bundle_tangent_chern(ring), THREEFOLD_DEGREE)
    return {
        'c1_cubed': integrate_over_X(c[1] ** 3),
        'c1_c2': integrate_over_X(c[1] * c[2]),
        'euler_number': integrate_over_X(c[3]),
    }


@dataclass(frozen=True)
class RieroResult:
    chi_T_X: RingElement
    target: RingElement
    residual: RingElement

    @property
    def holds(self) -> bool:
        return self.residual.is_zero

    def to_dict(self) -> Dict:
        return {
            'chi_T_X': self.chi_T_X.to_dict(),
            'h1_minus_h2_minus_h0': (-self.chi_T_X).to_dict(),
            'target': self.target.to_dict(),
            'residual': self.residual.to_dict(),
            'holds': self.holds,
        }


def verify_riero(ring: Optional[GradedRing] = None) -> RieroResult:
    """
    h¹(T_X) - h²(T_X) = h⁰(T_X) - χ(T_X) since h³(T_X) = 0; the residual
    -χ(T_X) - (c₂(E) - c₁(E)c₁(S) - 2c₁²(S) + 7χ(𝒪_S)) must vanish.
    """
    ring = _ring(ring)
    integrand = conic_bundle_tangent(ring) * todd_class(conic_bundle_tangent_chern(ring), THREEFOLD_DEGREE)
    product = integrand.homogeneous(THREEFOLD_DEGREE) * conic_class(ring)
    # e₃ has degree 3, so it only meets ξ⁰ and ξ¹ in degree 4 and pushes forward to 0
    chi = pushforward_to_S(product.homogeneous(FOURFOLD_DEGREE))
    target = riero_target()
    residual = -chi - target
    result = RieroResult(chi, target, residual)
    if not result.holds:
        logger.error(f"h¹ - h² identity residual {residual}")
        raise ResidualNonzero(
            f"χ(T_X) leaves residual {residual} against h¹ - h² = h⁰ - χ(T_X)",
            residual.to_dict(),
        )
    logger.info("χ(T_X) matches the h¹ - h² formula: residual 0")
    return result


_EVALUATION = {
    'c1^2': lambda s, e: s.k_squared,
    'c2': lambda s, e: s.c2,
    'c1*e1': lambda s, e: e.c1_dot_c1S,
    'e1^2': lambda s, e: e.c1_sq,
    'e2': lambda s, e: e.c2,
}


def evaluate(element: RingElement, surface: SurfaceModel, bundle: BundleInvariants) -> Fraction:
    """The number a degree-2 surface class takes on (S, E)."""
    if element.ring.has_generator('xi'):
        raise DegreeMismatch("Only surface classes can be evaluated; push forward first")
    if any(not element.homogeneous(d).is_zero for d in (0, 1)):
        raise DegreeMismatch(f"{element} is not a pure degree-2 class")
    total = Fraction(0)
    for monomial, coeff in element.homogeneous(2).to_dict().items():
        if monomial not in _EVALUATION:
            raise DegreeMismatch(f"No numerical value for {monomial}")
        total += coeff * _EVALUATION[monomial](surface, bundle)
    return total
