"""
Weighted intersection graphs of irreducible curves on a surface.

A configuration stores global intersection numbers C_i·C_j (both orders),
marked points carrying local data, and counts of unmarked transversal
intersections. `validate` checks that the global numbers are the sum of the
local contributions.
"""
from collections import defaultdict
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Tuple

from curves.exceptions import UnknownCurve, UnsupportedLocalType

GENUS_NOTES = ('node', 'cusp')

Pair = FrozenSet[str]


def pair(a: str, b: str) -> Pair:
    return frozenset((a, b))


class LocalType(str, Enum):
    ORDINARY = 'ordinary'
    TANGENTIAL = 'tangential'
    TRIPLE_ORDINARY = 'triple_ordinary'
    CUSP_ON_CURVE = 'cusp_on_curve'

    @classmethod
    def parse(cls, value) -> 'LocalType':
        if isinstance(value, cls):
            return value
        try:
            return cls(value)
        except ValueError:
            raise UnsupportedLocalType(f"Unsupported local type: {value!r}")


@dataclass(frozen=True)
class CurveNode:
    """
    An irreducible curve.

    genus_note tags a rational curve with one node or cusp (arithmetic genus 1).
    genus records the arithmetic genus of any other curve that is not smooth rational.
    """
    id: str
    self_int: int
    rational_smooth: bool = True
    genus_note: Optional[str] = None
    genus: Optional[int] = None


@dataclass(frozen=True)
class Incidence:
    curve: str
    multiplicity: int = 1


@dataclass(frozen=True)
class MarkedPoint:
    id: str
    incidences: Tuple[Incidence, ...]
    local_type: LocalType = LocalType.ORDINARY

    @property
    def curves(self) -> Tuple[str, ...]:
        return tuple(inc.curve for inc in self.incidences)

    def multiplicity_of(self, curve: str) -> int:
        for inc in self.incidences:
            if inc.curve == curve:
                return inc.multiplicity
        return 0

    def contributions(self) -> Dict[Pair, int]:
        """Local intersection number at this point for each pair of incident curves."""
        if self.local_type is LocalType.TANGENTIAL:
            if len(self.incidences) != 2:
                return {}
            a, b = self.curves
            return {pair(a, b): 2}
        if self.local_type is LocalType.CUSP_ON_CURVE:
            return {}
        return {
            pair(a.curve, b.curve): a.multiplicity * b.multiplicity
            for a, b in combinations(self.incidences, 2)
            if a.curve != b.curve
        }


@dataclass(frozen=True)
class Violation:
    kind: str
    detail: str


@dataclass(frozen=True)
class ReducedDivisor:
    """Sum of distinct components, each with coefficient 1."""
    components: FrozenSet[str] = frozenset()

    @classmethod
    def of(cls, ids: Iterable[str]) -> 'ReducedDivisor':
        return cls(frozenset(ids))

    @classmethod
    def zero(cls) -> 'ReducedDivisor':
        return cls(frozenset())

    @property
    def is_zero(self) -> bool:
        return not self.components

    def __contains__(self, curve) -> bool:
        return curve in self.components

    def __iter__(self) -> Iterator[str]:
        return iter(sorted(self.components))

    def __len__(self) -> int:
        return len(self.components)

    def without(self, curve: str) -> 'ReducedDivisor':
        return ReducedDivisor(self.components - {curve})


@dataclass(frozen=True)
class CurveConfiguration:
    nodes: Tuple[CurveNode, ...]
    pairwise: Mapping[Tuple[str, str], int] = field(default_factory=dict)
    points: Tuple[MarkedPoint, ...] = ()
    unmarked: Mapping[Pair, int] = field(default_factory=dict)

    @classmethod
    def build(cls, nodes: Iterable[CurveNode], points: Iterable[MarkedPoint] = (),
              unmarked: Optional[Mapping[Pair, int]] = None) -> 'CurveConfiguration':
        """Configuration whose pairwise numbers are computed from points and unmarked counts."""
        nodes = tuple(nodes)
        points = tuple(points)
        unmarked = {p: n for p, n in (unmarked or {}).items() if n}
        totals: Dict[Pair, int] = defaultdict(int)
        for point in points:
            for key, value in point.contributions().items():
                totals[key] += value
        for key, value in unmarked.items():
            totals[key] += value
        pairwise = {}
        for key, value in totals.items():
            if value and len(key) == 2:
                a, b = sorted(key)
                pairwise[(a, b)] = value
                pairwise[(b, a)] = value
        return cls(nodes=nodes, pairwise=pairwise, points=points, unmarked=unmarked)

    @cached_property
    def _nodes_by_id(self) -> Dict[str, CurveNode]:
        return {node.id: node for node in self.nodes}

    @cached_property
    def _neighbors(self) -> Dict[str, Tuple[Tuple[str, int], ...]]:
        table: Dict[str, List[Tuple[str, int]]] = defaultdict(list)
        for (a, b), value in self.pairwise.items():
            if a != b and value:
                table[a].append((b, value))
        return {key: tuple(sorted(entries)) for key, entries in table.items()}

    @property
    def node_ids(self) -> Tuple[str, ...]:
        return tuple(node.id for node in self.nodes)

    def has_node(self, curve: str) -> bool:
        return curve in self._nodes_by_id

    def node(self, curve: str) -> CurveNode:
        try:
            return self._nodes_by_id[curve]
        except KeyError:
            raise UnknownCurve(f"No curve with id {curve!r}")

    def point(self, point_id: str) -> MarkedPoint:
        for point in self.points:
            if point.id == point_id:
                return point
        raise UnknownCurve(f"No marked point with id {point_id!r}")

    def intersection(self, a: str, b: str) -> int:
        return self.pairwise.get((a, b), 0)

    def neighbors(self, curve: str) -> Tuple[Tuple[str, int], ...]:
        """(id, C·C') for every curve meeting `curve`."""
        return self._neighbors.get(curve, ())

    def unmarked_count(self, a: str, b: str) -> int:
        return self.unmarked.get(pair(a, b), 0)

    def full_divisor(self) -> ReducedDivisor:
        return ReducedDivisor.of(self.node_ids)

    def check_divisor(self, divisor: ReducedDivisor) -> None:
        for curve in divisor.components:
            if curve not in self._nodes_by_id:
                raise UnknownCurve(f"Divisor component {curve!r} is not a curve of the configuration")

    def fresh_id(self, prefix: str) -> str:
        taken = set(self._nodes_by_id) | {p.id for p in self.points}
        index = 0
        while f"{prefix}{index}" in taken:
            index += 1
        return f"{prefix}{index}"


def _point_violations(point: MarkedPoint, known: Mapping[str, CurveNode]) -> List[Violation]:
    violations = []
    curves = point.curves
    mults = [inc.multiplicity for inc in point.incidences]
    for inc in point.incidences:
        if inc.curve not in known:
            violations.append(Violation('UnknownCurve', f"point {point.id} references {inc.curve}"))
        if inc.multiplicity < 1:
            violations.append(Violation('BadLocalType', f"point {point.id}: multiplicity {inc.multiplicity} < 1"))
    if len(set(curves)) != len(curves):
        violations.append(Violation('BadLocalType', f"point {point.id} lists a curve twice"))
    if not curves:
        violations.append(Violation('BadLocalType', f"point {point.id} has no incident curves"))

    expected = {
        LocalType.TRIPLE_ORDINARY: (3, 1),
        LocalType.TANGENTIAL: (2, 1),
        LocalType.CUSP_ON_CURVE: (1, 2),
    }.get(point.local_type)
    if expected:
        count, mult = expected
        if len(curves) != count or any(m != mult for m in mults):
            violations.append(Violation(
                'BadLocalType',
                f"point {point.id}: {point.local_type.value} needs {count} curve(s) of multiplicity {mult}",
            ))
    return violations


def validate(cfg: CurveConfiguration) -> List[Violation]:
    """Every broken invariant of the configuration; empty when it is consistent."""
    violations: List[Violation] = []

    seen = set()
    for node in cfg.nodes:
        if node.id in seen:
            violations.append(Violation('DuplicateId', f"curve {node.id} appears twice"))
        seen.add(node.id)
        if node.genus_note is not None and node.genus_note not in GENUS_NOTES:
            violations.append(Violation('BadGenusNote', f"curve {node.id}: {node.genus_note!r}"))
        if node.genus_note is not None and node.rational_smooth:
            violations.append(Violation('BadGenusNote', f"curve {node.id} is tagged singular but flagged smooth"))
        if node.genus is not None and (node.genus < 0 or (node.rational_smooth and node.genus != 0)):
            violations.append(Violation('BadGenus', f"curve {node.id}: arithmetic genus {node.genus}"))
        if node.genus is not None and node.genus_note is not None and node.genus != 1:
            violations.append(Violation('BadGenus', f"curve {node.id} is tagged {node.genus_note} but has genus {node.genus}"))
    known = {node.id: node for node in cfg.nodes}

    point_ids = set()
    for point in cfg.points:
        if point.id in point_ids:
            violations.append(Violation('DuplicateId', f"point {point.id} appears twice"))
        point_ids.add(point.id)
        violations.extend(_point_violations(point, known))

    for (a, b), value in sorted(cfg.pairwise.items()):
        if a == b:
            violations.append(Violation('SelfPair', f"pairwise ({a}, {a}) is undefined; use self_int"))
            continue
        if a not in known or b not in known:
            violations.append(Violation('UnknownCurve', f"pairwise ({a}, {b}) references an unknown curve"))
        if value < 0:
            violations.append(Violation('NegativeIntersection', f"pairwise ({a}, {b}) = {value}"))
        if a < b and cfg.pairwise.get((b, a), 0) != value:
            violations.append(Violation(
                'SymmetryViolation',
                f"pairwise ({a}, {b}) = {value} but ({b}, {a}) = {cfg.pairwise.get((b, a), 0)}",
            ))
        elif a > b and (b, a) not in cfg.pairwise and value:
            violations.append(Violation('SymmetryViolation', f"pairwise ({a}, {b}) = {value} but ({b}, {a}) is missing"))

    for key, value in cfg.unmarked.items():
        if len(key) != 2 or value < 0 or any(c not in known for c in key):
            violations.append(Violation('BadUnmarkedCount', f"unmarked {sorted(key)} = {value}"))

    expected: Dict[Pair, int] = defaultdict(int)
    for point in cfg.points:
        for key, value in point.contributions().items():
            expected[key] += value
    for key, value in cfg.unmarked.items():
        expected[key] += value
    keys = set(expected) | {pair(a, b) for (a, b) in cfg.pairwise if a != b}
    for key in sorted(keys, key=sorted):
        if len(key) != 2:
            continue
        a, b = sorted(key)
        actual = cfg.pairwise.get((a, b), cfg.pairwise.get((b, a), 0))
        if actual != expected.get(key, 0):
            violations.append(Violation(
                'InconsistentIntersection',
                f"{a}·{b} = {actual} but marked points and unmarked counts give {expected.get(key, 0)}",
            ))
    return violations
