"""
Property (P) census over the Kodaira catalog and over small trees.

On a fiber every (P)-divisor should be the full reduced configuration with
D² = 0; every tree of smooth rational curves should fail (P) at a leaf.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx
from django.conf import settings

from curves.configuration import CurveConfiguration, CurveNode, Incidence, LocalType, MarkedPoint
from curves.services import property_P, self_intersection
from fibers.catalog import FiberRecord, catalog_types, fiber_label
from fibers.services.enumeration import enumerate_reduced_subdivisors, is_tree_of_smooth_rationals

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CensusDivisor:
    components: Tuple[str, ...]
    d_squared: int
    full: bool

    @property
    def violates(self) -> bool:
        return self.d_squared != 0 or not self.full


@dataclass
class CensusEntry:
    label: str
    subsets: int
    p_divisors: List[CensusDivisor] = field(default_factory=list)

    @property
    def violations(self) -> List[CensusDivisor]:
        return [d for d in self.p_divisors if d.violates]

    @property
    def full_has_p(self) -> bool:
        return any(d.full for d in self.p_divisors)

    def to_dict(self) -> Dict:
        return {
            'type': self.label,
            'subsets': self.subsets,
            'p_divisors': [
                {'components': list(d.components), 'd_squared': d.d_squared, 'full': d.full}
                for d in self.p_divisors
            ],
        }

    @classmethod
    def from_dict(cls, data: Dict) -> 'CensusEntry':
        return cls(
            label=data['type'],
            subsets=data['subsets'],
            p_divisors=[
                CensusDivisor(tuple(d['components']), d['d_squared'], d['full'])
                for d in data['p_divisors']
            ],
        )


@dataclass
class TreeCensus:
    max_components: int
    trees_by_order: Dict[int, int] = field(default_factory=dict)
    exceptions: List[Dict] = field(default_factory=list)

    @property
    def total(self) -> int:
        return sum(self.trees_by_order.values())

    def to_dict(self) -> Dict:
        return {
            'max_components': self.max_components,
            'trees_by_order': {str(k): v for k, v in sorted(self.trees_by_order.items())},
            'total': self.total,
            'exceptions': self.exceptions,
        }


@dataclass
class CensusReport:
    entries: List[CensusEntry]
    trees: Optional[TreeCensus] = None

    @property
    def violations(self) -> List[Tuple[str, CensusDivisor]]:
        return [(entry.label, d) for entry in self.entries for d in entry.violations]

    @property
    def ok(self) -> bool:
        return not self.violations and not (self.trees and self.trees.exceptions)

    def to_dict(self) -> Dict:
        return {
            'ok': self.ok,
            'types': [entry.to_dict() for entry in self.entries],
            'violations': [
                {'type': label, 'components': list(d.components), 'd_squared': d.d_squared}
                for label, d in self.violations
            ],
            'trees': self.trees.to_dict() if self.trees else None,
        }


def census_entry(record: FiberRecord) -> CensusEntry:
    """Every reduced sub-divisor of one fiber that has property (P), with its square."""
    total = len(record.config.node_ids)
    entry = CensusEntry(label=record.label, subsets=0)
    for divisor in enumerate_reduced_subdivisors(record):
        entry.subsets += 1
        if not property_P(record.config, divisor):
            continue
        entry.p_divisors.append(CensusDivisor(
            components=tuple(divisor),
            d_squared=self_intersection(record.config, divisor),
            full=len(divisor) == total,
        ))
    return entry


def census(max_n: Optional[int] = None, multiplicities: Optional[Sequence[int]] = None,
           max_components: Optional[int] = None) -> CensusReport:
    """
    Run the census over catalog_types(max_n), one task per fiber type, and
    the tree census when max_components is given (0 skips it).
    """
    from fibers.tasks import census_fiber_type

    max_n = settings.CENSUS_MAX_N if max_n is None else max_n
    multiplicities = settings.CENSUS_MULTIPLE_FIBER_MULTIPLICITIES if multiplicities is None else multiplicities
    max_components = settings.TREE_MAX_COMPONENTS if max_components is None else max_components

    types = catalog_types(max_n, multiplicities)
    pending = [census_fiber_type.delay(fiber_label(t)) for t in types]
    entries = [CensusEntry.from_dict(result.get()) for result in pending]

    trees = tree_census(max_components) if max_components else None
    report = CensusReport(entries, trees)
    for label, divisor in report.violations:
        logger.error(f"Census violation on {label}: {divisor.components} with D² = {divisor.d_squared}")
    logger.info(
        f"Census over {len(entries)} fiber types: "
        f"{sum(e.subsets for e in entries)} sub-divisors, {len(report.violations)} violations"
    )
    return report


def tree_configuration(graph: nx.Graph) -> CurveConfiguration:
    """(-2)-curves on the vertices of a tree, meeting transversally along its edges."""
    nodes = [CurveNode(f"C{v}", -2, True, None) for v in sorted(graph.nodes)]
    points = [
        MarkedPoint(f"p{k}", (Incidence(f"C{a}"), Incidence(f"C{b}")), LocalType.ORDINARY)
        for k, (a, b) in enumerate(sorted(tuple(sorted(e)) for e in graph.edges))
    ]
    return CurveConfiguration.build(nodes, points)


def trees_of_order(order: int):
    if order == 1:
        return [nx.empty_graph(1)]
    return nx.nonisomorphic_trees(order)


def tree_census(max_components: int) -> TreeCensus:
    """Every unlabeled tree up to max_components vertices fails (P) at a leaf."""
    report = TreeCensus(max_components=max_components)
    for order in range(1, max_components + 1):
        count = 0
        for graph in trees_of_order(order):
            count += 1
            cfg = tree_configuration(graph)
            divisor = cfg.full_divisor()
            result = property_P(cfg, divisor)
            if not is_tree_of_smooth_rationals(cfg, divisor) or result.holds or result.witness_degree > 1:
                report.exceptions.append({
                    'order': order,
                    'edges': sorted(tuple(sorted(e)) for e in graph.edges),
                    'witness': result.witness,
                })
        report.trees_by_order[order] = count
    logger.info(f"Tree census up to {max_components} components: {report.total} trees, "
                f"{len(report.exceptions)} exceptions")
    return report
