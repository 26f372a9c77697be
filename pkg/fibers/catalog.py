"""
Kodaira's singular fibers of elliptic fibrations as curve configurations.

Entries are built from the standard tables and gated on load: the fiber
F = Σ mᵢCᵢ must satisfy F·Cⱼ = 0 for every component and F² = 0.
"""
import re
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Dict, List, Mapping, Sequence, Tuple

from curves.api.serializers import configuration_document
from curves.configuration import CurveConfiguration, CurveNode, Incidence, LocalType, MarkedPoint, validate
from fibers.exceptions import CatalogError, UnknownType


class FiberKind(str, Enum):
    I0 = 'I0'
    IN = 'In'
    MIN = 'mIn'
    II = 'II'
    III = 'III'
    IV = 'IV'
    I0_STAR = 'I0star'
    IN_STAR = 'Instar'
    II_STAR = 'IIstar'
    III_STAR = 'IIIstar'
    IV_STAR = 'IVstar'


# Kinds without parameters
FIXED_KINDS = (
    FiberKind.I0, FiberKind.II, FiberKind.III, FiberKind.IV,
    FiberKind.I0_STAR, FiberKind.II_STAR, FiberKind.III_STAR, FiberKind.IV_STAR,
)

_EULER = {
    FiberKind.I0: 0,
    FiberKind.II: 2,
    FiberKind.III: 3,
    FiberKind.IV: 4,
    FiberKind.I0_STAR: 6,
    FiberKind.IV_STAR: 8,
    FiberKind.III_STAR: 9,
    FiberKind.II_STAR: 10,
}


@dataclass(frozen=True)
class FiberType:
    kind: FiberKind
    n: int = 0
    m: int = 1

    def __post_init__(self):
        try:
            object.__setattr__(self, 'kind', FiberKind(self.kind))
        except ValueError:
            raise UnknownType(f"Unknown fiber kind {self.kind!r}")
        if self.kind in FIXED_KINDS and (self.n, self.m) != (0, 1):
            raise UnknownType(f"{self.kind.value} takes no parameters (n={self.n}, m={self.m})")
        if self.kind in (FiberKind.IN, FiberKind.IN_STAR) and (self.n < 1 or self.m != 1):
            raise UnknownType(f"{self.kind.value} needs n ≥ 1 and no multiplicity (n={self.n}, m={self.m})")
        if self.kind is FiberKind.MIN and (self.m < 2 or self.n < 0):
            raise UnknownType(f"mIn needs m ≥ 2 and n ≥ 0 (n={self.n}, m={self.m})")

    @property
    def label(self) -> str:
        return fiber_label(self)

    @property
    def is_starred(self) -> bool:
        return self.kind in (
            FiberKind.I0_STAR, FiberKind.IN_STAR, FiberKind.II_STAR, FiberKind.III_STAR, FiberKind.IV_STAR,
        )

    @classmethod
    def from_kind(cls, kind: str, n: int = 0, m: int = 1) -> 'FiberType':
        """A kind name ("In", "I0star") with parameters, or a label such as "3I4"."""
        try:
            FiberKind(kind)
        except ValueError:
            return parse_fiber_type(kind)
        return cls(FiberKind(kind), n, m)


@dataclass(frozen=True)
class FiberRecord:
    type: FiberType
    config: CurveConfiguration
    component_multiplicities: Mapping[str, int]
    euler_number: int

    @property
    def label(self) -> str:
        return self.type.label

    def fiber_dot(self, curve: str) -> int:
        """F·C for a component C."""
        total = 0
        for other, mult in self.component_multiplicities.items():
            if other == curve:
                total += mult * self.config.node(curve).self_int
            else:
                total += mult * self.config.intersection(other, curve)
        return total

    def fiber_square(self) -> int:
        return sum(mult * self.fiber_dot(curve) for curve, mult in self.component_multiplicities.items())


def fiber_label(fiber_type: FiberType) -> str:
    kind, n, m = fiber_type.kind, fiber_type.n, fiber_type.m
    if kind is FiberKind.IN:
        return f"I{n}"
    if kind is FiberKind.MIN:
        return f"{m}I{n}"
    if kind is FiberKind.IN_STAR:
        return f"I{n}*"
    if kind.value.endswith('star'):
        return kind.value[:-len('star')] + '*'
    return kind.value


_LABEL = re.compile(r'^(?:(?P<m>\d+)I(?P<mn>\d+)|I(?P<n>\d+)(?P<istar>\*)?|(?P<roman>II|III|IV)(?P<star>\*)?)$')


def parse_fiber_type(text: str) -> FiberType:
    """Inverse of fiber_label: "I0", "I5", "2I3", "I0*", "I4*", "II", "IV*", ..."""
    match = _LABEL.match(text.strip())
    if not match:
        raise UnknownType(f"Cannot parse fiber type {text!r}")
    if match.group('m') is not None:
        return FiberType(FiberKind.MIN, int(match.group('mn')), int(match.group('m')))
    if match.group('n') is not None:
        n = int(match.group('n'))
        if match.group('istar'):
            return FiberType(FiberKind.I0_STAR) if n == 0 else FiberType(FiberKind.IN_STAR, n)
        return FiberType(FiberKind.I0) if n == 0 else FiberType(FiberKind.IN, n)
    suffix = 'star' if match.group('star') else ''
    return FiberType(FiberKind(match.group('roman') + suffix))


def _minus_two(index: int) -> CurveNode:
    return CurveNode(f"C{index}", -2, True, None)


def _ordinary(index: int, a: str, b: str) -> MarkedPoint:
    return MarkedPoint(f"p{index}", (Incidence(a), Incidence(b)), LocalType.ORDINARY)


def _tree_fiber(multiplicities: Sequence[int], edges: Sequence[Tuple[int, int]]):
    """(-2)-curves C0, C1, ... meeting transversally along `edges`."""
    nodes = [_minus_two(i) for i in range(len(multiplicities))]
    points = [_ordinary(k, f"C{i}", f"C{j}") for k, (i, j) in enumerate(edges)]
    mults = {f"C{i}": m for i, m in enumerate(multiplicities)}
    return CurveConfiguration.build(nodes, points), mults


def _smooth_elliptic():
    return CurveConfiguration.build([CurveNode('C0', 0, False, None, genus=1)]), {'C0': 1}


def _cycle(n: int):
    if n == 1:
        node = CurveNode('C0', 0, False, 'node')
        point = MarkedPoint('p0', (Incidence('C0', 2),), LocalType.ORDINARY)
        return CurveConfiguration.build([node], [point]), {'C0': 1}
    return _tree_fiber([1] * n, [(i, (i + 1) % n) for i in range(n)])


def _d_tilde(n: int):
    """I_n*: a chain B0..Bn of multiplicity 2 with two leaves at each end (four on B0 when n = 0)."""
    mults = [2] * (n + 1) + [1] * 4
    edges = [(i, i + 1) for i in range(n)]
    leaf = n + 1
    edges += [(0, leaf), (0, leaf + 1), (n, leaf + 2), (n, leaf + 3)]
    return _tree_fiber(mults, edges)


def _build(fiber_type: FiberType):
    kind = fiber_type.kind
    if kind is FiberKind.I0:
        return _smooth_elliptic()
    if kind is FiberKind.IN:
        return _cycle(fiber_type.n)
    if kind is FiberKind.MIN:
        cfg, mults = _cycle(fiber_type.n) if fiber_type.n else _smooth_elliptic()
        return cfg, {c: fiber_type.m * v for c, v in mults.items()}
    if kind is FiberKind.II:
        node = CurveNode('C0', 0, False, 'cusp')
        point = MarkedPoint('p0', (Incidence('C0', 2),), LocalType.CUSP_ON_CURVE)
        return CurveConfiguration.build([node], [point]), {'C0': 1}
    if kind is FiberKind.III:
        point = MarkedPoint('p0', (Incidence('C0'), Incidence('C1')), LocalType.TANGENTIAL)
        return CurveConfiguration.build([_minus_two(0), _minus_two(1)], [point]), {'C0': 1, 'C1': 1}
    if kind is FiberKind.IV:
        point = MarkedPoint('p0', tuple(Incidence(f"C{i}") for i in range(3)), LocalType.TRIPLE_ORDINARY)
        return CurveConfiguration.build([_minus_two(i) for i in range(3)], [point]), {f"C{i}": 1 for i in range(3)}
    if kind is FiberKind.I0_STAR:
        return _d_tilde(0)
    if kind is FiberKind.IN_STAR:
        return _d_tilde(fiber_type.n)
    if kind is FiberKind.IV_STAR:
        # center 3; three arms 2-1
        return _tree_fiber([3, 2, 1, 2, 1, 2, 1], [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
    if kind is FiberKind.III_STAR:
        # center 4; arms 3-2-1, 3-2-1 and 2
        return _tree_fiber([4, 3, 2, 1, 3, 2, 1, 2], [(0, 1), (1, 2), (2, 3), (0, 4), (4, 5), (5, 6), (0, 7)])
    if kind is FiberKind.II_STAR:
        # chain 2-4-6-5-4-3-2-1 with a 3 on the 6
        return _tree_fiber(
            [2, 4, 6, 5, 4, 3, 2, 1, 3],
            [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 8)],
        )
    raise UnknownType(f"Unknown fiber kind {kind!r}")


def euler_number(fiber_type: FiberType) -> int:
    if fiber_type.kind in (FiberKind.IN, FiberKind.MIN):
        return fiber_type.n
    if fiber_type.kind is FiberKind.IN_STAR:
        return fiber_type.n + 6
    return _EULER[fiber_type.kind]


def _gate(record: FiberRecord) -> FiberRecord:
    violations = validate(record.config)
    if violations:
        raise CatalogError(f"{record.label}: inconsistent configuration: {violations[0].kind}: {violations[0].detail}")
    for curve in record.config.node_ids:
        value = record.fiber_dot(curve)
        if value != 0:
            raise CatalogError(f"{record.label}: F·{curve} = {value}")
    if record.fiber_square() != 0:
        raise CatalogError(f"{record.label}: F² = {record.fiber_square()}")
    return record


@lru_cache(maxsize=None)
def fiber(fiber_type: FiberType) -> FiberRecord:
    """The catalog entry for a Kodaira fiber type."""
    if not isinstance(fiber_type, FiberType):
        raise UnknownType(f"Not a fiber type: {fiber_type!r}")
    cfg, mults = _build(fiber_type)
    return _gate(FiberRecord(fiber_type, cfg, dict(mults), euler_number(fiber_type)))


def catalog_types(max_n: int, multiplicities: Sequence[int] = (2, 3)) -> List[FiberType]:
    """Every type with parameter n ≤ max_n, multiple fibers for the given m."""
    types = [FiberType(FiberKind.I0)]
    types += [FiberType(FiberKind.IN, n) for n in range(1, max_n + 1)]
    types += [FiberType(FiberKind.MIN, n, m) for m in multiplicities for n in range(0, max_n + 1)]
    types += [FiberType(FiberKind.II), FiberType(FiberKind.III), FiberType(FiberKind.IV)]
    types += [FiberType(FiberKind.I0_STAR)]
    types += [FiberType(FiberKind.IN_STAR, n) for n in range(1, max_n + 1)]
    types += [FiberType(FiberKind.IV_STAR), FiberType(FiberKind.III_STAR), FiberType(FiberKind.II_STAR)]
    return types


def record_document(record: FiberRecord) -> Dict:
    return {
        'type': record.label,
        'kind': record.type.kind.value,
        'n': record.type.n,
        'm': record.type.m,
        'euler_number': record.euler_number,
        'component_multiplicities': dict(sorted(record.component_multiplicities.items())),
        'config': configuration_document(record.config),
    }
