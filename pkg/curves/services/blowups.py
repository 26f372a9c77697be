"""
Blow-up and blow-down calculus on curve configurations.
"""
import logging
from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, List, NamedTuple, Optional

from curves.configuration import (
    CurveConfiguration,
    CurveNode,
    Incidence,
    LocalType,
    MarkedPoint,
    Pair,
    ReducedDivisor,
    Violation,
    pair,
    validate,
)
from curves.exceptions import BadEpsilon, BadMultiplicity, InvalidConfiguration, NotMinusOneCurve, UnknownGenus
from curves.services.property_p import arithmetic_genus

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BlowUpResult:
    config: CurveConfiguration
    exceptional_id: str
    transforms: Dict[str, str]


@dataclass(frozen=True)
class BlowDownResult:
    config: CurveConfiguration
    pushforward: Dict[str, Optional[str]]
    image_point: Optional[str] = None

    def push(self, divisor: ReducedDivisor) -> ReducedDivisor:
        return ReducedDivisor.of(
            self.pushforward[c] for c in divisor.components if self.pushforward.get(c)
        )


class PulledBack(NamedTuple):
    d_squared: int
    d_dot_k: int


def _require_valid(cfg: CurveConfiguration) -> None:
    violations = validate(cfg)
    if violations:
        raise InvalidConfiguration(violations)


def _fresh_point_id(cfg: CurveConfiguration, base: str, taken: set) -> str:
    candidate = f"{base}'"
    while candidate in taken or cfg.has_node(candidate):
        candidate += "'"
    taken.add(candidate)
    return candidate


def _singular_elsewhere(cfg: CurveConfiguration, curve: str, point_id: str) -> bool:
    for point in cfg.points:
        if point.id == point_id:
            continue
        if point.multiplicity_of(curve) >= 2 or (
            point.local_type is LocalType.CUSP_ON_CURVE and curve in point.curves
        ):
            return True
    return False


def _known_genus(node: CurveNode) -> Optional[int]:
    try:
        return arithmetic_genus(node)
    except UnknownGenus:
        return None


def _strict_transform(cfg: CurveConfiguration, node: CurveNode, multiplicity: int, point_id: str) -> CurveNode:
    rational_smooth = node.rational_smooth
    genus_note = node.genus_note
    # resolving the only singular point of a nodal or cuspidal rational curve
    if multiplicity >= 2 and genus_note in ('node', 'cusp') and not _singular_elsewhere(cfg, node.id, point_id):
        rational_smooth, genus_note = True, None
    genus = node.genus
    # p_a drops by m(m - 1)/2 under the blow-up of a point of multiplicity m
    if genus is not None:
        genus -= multiplicity * (multiplicity - 1) // 2
    return CurveNode(
        id=node.id,
        self_int=node.self_int - multiplicity ** 2,
        rational_smooth=rational_smooth,
        genus_note=genus_note,
        genus=genus,
    )


def blow_up(cfg: CurveConfiguration, point_id: str, exceptional_id: Optional[str] = None) -> BlowUpResult:
    """
    Blow up a marked point.

    Incident curves of multiplicity m lose m² from their self-intersection and
    meet the exceptional curve m times. A tangency becomes an ordinary triple
    point of the two strict transforms and the exceptional curve; a cusp
    becomes a tangency with the exceptional curve.
    """
    _require_valid(cfg)
    point = cfg.point(point_id)
    exceptional = exceptional_id or cfg.fresh_id('E')
    if cfg.has_node(exceptional):
        raise InvalidConfiguration([Violation('DuplicateId', f"curve {exceptional} already exists")])
    mults = {inc.curve: inc.multiplicity for inc in point.incidences}

    nodes = [
        _strict_transform(cfg, node, mults[node.id], point.id) if node.id in mults else node
        for node in cfg.nodes
    ]
    nodes.append(CurveNode(exceptional, -1, True, None))

    taken = {p.id for p in cfg.points if p.id != point.id}
    points = [p for p in cfg.points if p.id != point.id]
    unmarked: Dict[Pair, int] = defaultdict(int, cfg.unmarked)

    if point.local_type is LocalType.TANGENTIAL:
        a, b = point.curves
        points.append(MarkedPoint(
            _fresh_point_id(cfg, point.id, taken),
            (Incidence(a), Incidence(b), Incidence(exceptional)),
            LocalType.TRIPLE_ORDINARY,
        ))
    elif point.local_type is LocalType.CUSP_ON_CURVE:
        (curve,) = point.curves
        points.append(MarkedPoint(
            _fresh_point_id(cfg, point.id, taken),
            (Incidence(curve), Incidence(exceptional)),
            LocalType.TANGENTIAL,
        ))
    else:
        for curve, multiplicity in mults.items():
            unmarked[pair(curve, exceptional)] += multiplicity

    result = CurveConfiguration.build(nodes, points, unmarked)
    logger.info(f"Blew up {point.local_type.value} point {point.id}; exceptional curve {exceptional}")
    return BlowUpResult(result, exceptional, {node.id: node.id for node in cfg.nodes})


def _merged_point(c0: str, hits: Dict[str, int], removed: List[MarkedPoint],
                  leftover: Dict[Pair, int], point_id: str) -> Optional[MarkedPoint]:
    """The image of c0, typed when the local data determines it."""
    if not hits:
        return None
    curves = sorted(hits)
    incidences = tuple(Incidence(c, hits[c]) for c in curves)

    if len(curves) == 1:
        curve = curves[0]
        if hits[curve] == 2 and any(
            p.local_type is LocalType.TANGENTIAL and set(p.curves) == {curve, c0} for p in removed
        ):
            return MarkedPoint(point_id, incidences, LocalType.CUSP_ON_CURVE)
        return MarkedPoint(point_id, incidences, LocalType.ORDINARY)

    if len(curves) == 2 and all(hits[c] == 1 for c in curves):
        a, b = curves
        through_one_point = any(
            p.local_type is LocalType.TRIPLE_ORDINARY and set(p.curves) == {a, b, c0} for p in removed
        )
        if through_one_point and leftover.get(pair(a, b), 0) >= 1:
            leftover[pair(a, b)] -= 1
            return MarkedPoint(point_id, incidences, LocalType.TANGENTIAL)

    if len(curves) == 3 and all(hits[c] == 1 for c in curves) and not any(
        leftover.get(pair(a, b), 0) for a in curves for b in curves if a < b
    ):
        return MarkedPoint(point_id, incidences, LocalType.TRIPLE_ORDINARY)

    return MarkedPoint(point_id, incidences, LocalType.ORDINARY)


def blow_down(cfg: CurveConfiguration, c0: str) -> BlowDownResult:
    """
    Contract the (-1)-curve c0.

    C'_i·C'_j = C_i·C_j + (C₀·C_i)(C₀·C_j) and C'_i² = C_i² + (C₀·C_i)².
    Marked points on c0 merge into a single point at its image.
    """
    _require_valid(cfg)
    node0 = cfg.node(c0)
    if node0.self_int != -1 or not node0.rational_smooth:
        raise NotMinusOneCurve(f"{c0} is not a smooth rational (-1)-curve (C² = {node0.self_int})")

    hits = {other: value for other, value in cfg.neighbors(c0)}
    removed = [p for p in cfg.points if c0 in p.curves]
    kept = [p for p in cfg.points if c0 not in p.curves]

    leftover: Dict[Pair, int] = defaultdict(int)
    for point in removed:
        for key, value in point.contributions().items():
            if c0 not in key:
                leftover[key] += value

    taken = {p.id for p in kept}
    image_id = _fresh_point_id(cfg, f"p_{c0}", taken) if hits else None
    image = _merged_point(c0, hits, removed, leftover, image_id) if hits else None

    unmarked: Dict[Pair, int] = defaultdict(int)
    for key, value in cfg.unmarked.items():
        if c0 not in key:
            unmarked[key] += value
    for key, value in leftover.items():
        unmarked[key] += value

    nodes = []
    for node in cfg.nodes:
        if node.id == c0:
            continue
        m = hits.get(node.id, 0)
        if m == 0:
            nodes.append(node)
            continue
        note, genus = node.genus_note, node.genus
        if m >= 2:
            base = _known_genus(node)
            genus = None if base is None else base + m * (m - 1) // 2
            note = None
            if base == 0 and m == 2:
                note, genus = ('cusp' if image.local_type is LocalType.CUSP_ON_CURVE else 'node'), None
        nodes.append(CurveNode(
            id=node.id,
            self_int=node.self_int + m * m,
            rational_smooth=node.rational_smooth and m <= 1,
            genus_note=note,
            genus=genus,
        ))

    points = kept + ([image] if image else [])
    result = CurveConfiguration.build(nodes, points, unmarked)
    pushforward: Dict[str, Optional[str]] = {node.id: node.id for node in cfg.nodes}
    pushforward[c0] = None
    logger.info(f"Contracted {c0}; image point {image_id}")
    return BlowDownResult(result, pushforward, image_id)


def pushforward_divisor(divisor: ReducedDivisor, c0: str) -> ReducedDivisor:
    return divisor.without(c0)


def pullback_divisor(d_prime_squared: int, d_prime_dot_k: int, mu: int, eps: int) -> PulledBack:
    """
    (D², D·K) on the blown-up surface for D = p*D' + (ε - μ)C₀ and K = p*K' + C₀.

    D² = D'² - (μ - ε)²  and  D·K = D'·K' + (μ - ε).
    """
    if eps not in (0, 1):
        raise BadEpsilon(f"ε must be 0 or 1 for a reduced divisor, got {eps}")
    if mu < 0:
        raise BadMultiplicity(f"μ must be nonnegative, got {mu}")
    excess = mu - eps
    return PulledBack(d_prime_squared - excess * excess, d_prime_dot_k + excess)
