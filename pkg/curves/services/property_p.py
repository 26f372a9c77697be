"""
Property (P) and the intersection numbers it is built from.

A reduced divisor D has property (P) when every smooth rational component C
satisfies C·(D - C) ≥ 2.
"""
from dataclasses import dataclass
from typing import Dict, Optional, Tuple, Union

from curves.configuration import GENUS_NOTES, CurveConfiguration, CurveNode, MarkedPoint, ReducedDivisor
from curves.exceptions import ComponentNotInDivisor, UnknownGenus
from surfaces.invariants import DivisorClass, IntersectionForm
from surfaces.services import intersect

MIN_PAIR_DEGREE = 2


@dataclass(frozen=True)
class PropertyResult:
    holds: bool
    witness: Optional[str] = None
    witness_degree: Optional[int] = None

    def __bool__(self):
        return self.holds


def pair_degree(cfg: CurveConfiguration, divisor: ReducedDivisor, curve: str) -> int:
    """C·(D - C) for a component C of D."""
    if curve not in divisor:
        raise ComponentNotInDivisor(f"{curve} is not a component of the divisor")
    return sum(value for other, value in cfg.neighbors(curve) if other in divisor)


def property_P(cfg: CurveConfiguration, divisor: ReducedDivisor) -> PropertyResult:
    cfg.check_divisor(divisor)
    for curve in divisor:
        if not cfg.node(curve).rational_smooth:
            continue
        degree = pair_degree(cfg, divisor, curve)
        if degree < MIN_PAIR_DEGREE:
            return PropertyResult(False, curve, degree)
    return PropertyResult(True)


def pair_degrees(cfg: CurveConfiguration, divisor: ReducedDivisor) -> Dict[str, int]:
    return {curve: pair_degree(cfg, divisor, curve) for curve in divisor}


def point_multiplicity(cfg: CurveConfiguration, divisor: ReducedDivisor,
                       point: Union[MarkedPoint, str]) -> int:
    """Multiplicity of D at a marked point: local multiplicities of incident D-components."""
    if isinstance(point, str):
        point = cfg.point(point)
    return sum(inc.multiplicity for inc in point.incidences if inc.curve in divisor)


def intersection_form(cfg: CurveConfiguration,
                      divisor: Optional[ReducedDivisor] = None) -> Tuple[IntersectionForm, Tuple[str, ...]]:
    """The pairing on the components (of D, or of the whole configuration), in id order."""
    ids = tuple(divisor) if divisor is not None else tuple(sorted(cfg.node_ids))
    matrix = [
        [cfg.node(a).self_int if a == b else cfg.intersection(a, b) for b in ids]
        for a in ids
    ]
    return IntersectionForm(matrix), ids


def self_intersection(cfg: CurveConfiguration, divisor: ReducedDivisor) -> int:
    """D² of a reduced divisor."""
    if divisor.is_zero:
        return 0
    cfg.check_divisor(divisor)
    form, ids = intersection_form(cfg, divisor)
    ones = DivisorClass((1,) * len(ids))
    return intersect(ones, ones, form)


def contraction_data(cfg: CurveConfiguration, divisor: ReducedDivisor, c0: str) -> Tuple[int, int]:
    """(μ, ε) for contracting c0: μ = C₀·(D - εC₀), ε = 1 when C₀ is a component of D."""
    cfg.node(c0)
    eps = 1 if c0 in divisor else 0
    mu = sum(value for other, value in cfg.neighbors(c0) if other in divisor)
    return mu, eps


def pushforward_pair_degree(cfg: CurveConfiguration, divisor: ReducedDivisor, c0: str, curve: str) -> int:
    """C'·(D' - C') after contracting c0: C·(D - C) + (C₀·C)·C₀·(D - C)."""
    if curve == c0:
        raise ComponentNotInDivisor(f"{c0} does not survive its own contraction")
    base = pair_degree(cfg, divisor, curve)
    rest = sum(
        value for other, value in cfg.neighbors(c0)
        if other in divisor and other != curve
    )
    if c0 in divisor:
        rest -= 1
    return base + cfg.intersection(c0, curve) * rest


def arithmetic_genus(node: CurveNode) -> int:
    """
    p_a of a curve: its recorded genus, else 0 when smooth rational and 1 when
    tagged nodal or cuspidal.

    Raises:
        UnknownGenus: the curve is not smooth rational and carries neither tag.
    """
    if node.genus is not None:
        return node.genus
    if node.rational_smooth:
        return 0
    if node.genus_note in GENUS_NOTES:
        return 1
    raise UnknownGenus(f"Curve {node.id} is not smooth rational and has no recorded genus")


def canonical_degree(cfg: CurveConfiguration, divisor: ReducedDivisor) -> int:
    """D·K by adjunction, C·K = 2p_a(C) - 2 - C² summed over components."""
    cfg.check_divisor(divisor)
    total = 0
    for curve in divisor:
        node = cfg.node(curve)
        total += 2 * arithmetic_genus(node) - 2 - node.self_int
    return total
