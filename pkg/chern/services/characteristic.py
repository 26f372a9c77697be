"""
Chern character, Todd class and the usual operations on total Chern classes,
all through Newton's identities on the homogeneous components.
"""
from fractions import Fraction
from math import factorial
from typing import List

from chern.exceptions import DegreeMismatch
from chern.ring import RingElement

TODD_MAX_DEGREE = 4


def chern_components(total: RingElement, up_to: int) -> List[RingElement]:
    """[c₀, c₁, ..., c_up_to] of a total Chern class; c₀ must be 1."""
    components = total.components(up_to)
    if components[0] != total.ring.one():
        raise DegreeMismatch(f"A total Chern class starts with 1, got {components[0]}")
    return components


def _power_sums(elementary: List[RingElement]) -> List[RingElement]:
    ring = elementary[0].ring
    sums = [ring.zero()]
    for k in range(1, len(elementary)):
        value = elementary[k] * ((-1) ** (k - 1) * k)
        for i in range(1, k):
            value = value + elementary[i] * sums[k - i] * (-1) ** (i - 1)
        sums.append(value)
    return sums


def chern_character(total_chern: RingElement, rank: int, up_to: int = None) -> RingElement:
    """ch = rank + Σ pₖ/k! with pₖ the power sums of the Chern roots."""
    ring = total_chern.ring
    up_to = ring.truncation_degree if up_to is None else up_to
    sums = _power_sums(chern_components(total_chern, up_to))
    result = ring.element(rank)
    for k in range(1, up_to + 1):
        result = result + sums[k] * Fraction(1, factorial(k))
    return result


def chern_from_character(character: RingElement, up_to: int = None) -> RingElement:
    """Inverse of chern_character; the rank is read from the degree-0 part."""
    ring = character.ring
    up_to = ring.truncation_degree if up_to is None else up_to
    parts = character.components(up_to)
    sums = [ring.zero()] + [parts[k] * factorial(k) for k in range(1, up_to + 1)]
    elementary = [ring.one()]
    for k in range(1, up_to + 1):
        value = ring.zero()
        for i in range(1, k + 1):
            value = value + elementary[k - i] * sums[i] * (-1) ** (i - 1)
        elementary.append(value * Fraction(1, k))
    total = ring.zero()
    for part in elementary:
        total = total + part
    return total


def todd_class(tangent_chern: RingElement, up_to: int = 3) -> RingElement:
    """td = 1 + c₁/2 + (c₁² + c₂)/12 + c₁c₂/24 + (-c₁⁴ + 4c₁²c₂ + 3c₂² + c₁c₃ - c₄)/720."""
    if up_to > TODD_MAX_DEGREE:
        raise DegreeMismatch(f"Todd class is implemented up to degree {TODD_MAX_DEGREE}, asked for {up_to}")
    ring = tangent_chern.ring
    c = chern_components(tangent_chern, TODD_MAX_DEGREE)
    terms = [
        ring.one(),
        c[1] * Fraction(1, 2),
        (c[1] ** 2 + c[2]) * Fraction(1, 12),
        c[1] * c[2] * Fraction(1, 24),
        (-(c[1] ** 4) + c[1] ** 2 * c[2] * 4 + c[2] ** 2 * 3 + c[1] * c[3] - c[4]) * Fraction(1, 720),
    ]
    result = ring.zero()
    for term in terms[:up_to + 1]:
        result = result + term
    return result


def dual(total_chern: RingElement) -> RingElement:
    """c(E*): cₖ ↦ (-1)ᵏcₖ."""
    ring = total_chern.ring
    result = ring.zero()
    for k, part in enumerate(total_chern.components(ring.truncation_degree)):
        result = result + part * (-1) ** k
    return result


def twist(total_chern: RingElement, rank: int, line_class: RingElement) -> RingElement:
    """c(E ⊗ L) = Σ cₖ(E)(1 + c₁(L))^(rank - k)."""
    ring = total_chern.ring
    c = chern_components(total_chern, rank)
    result = ring.zero()
    for k in range(rank + 1):
        result = result + c[k] * (ring.one() + line_class) ** (rank - k)
    return result


def exponential(cls: RingElement, up_to: int = None) -> RingElement:
    """e^cls, the Chern character of a line bundle with c₁ = cls."""
    ring = cls.ring
    up_to = ring.truncation_degree if up_to is None else up_to
    result = ring.zero()
    power = ring.one()
    for k in range(up_to + 1):
        result = result + power * Fraction(1, factorial(k))
        power = power * cls
    return result.truncated(up_to)


def inverse(total: RingElement) -> RingElement:
    """1/(1 + x) as Σ (-x)ᵏ for a class with constant term 1."""
    ring = total.ring
    if total.constant() != 1:
        raise DegreeMismatch(f"Only classes with constant term 1 are inverted, got {total}")
    nilpotent = total - 1
    result = ring.zero()
    power = ring.one()
    for _ in range(ring.truncation_degree + 1):
        result = result + power
        power = power * (-nilpotent)
    return result
