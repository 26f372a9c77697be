"""
Sub-divisor enumeration and shape predicates on intersection graphs.
"""
import logging
from itertools import combinations
from typing import Iterable, Iterator, Optional

import networkx as nx
from django.conf import settings

from curves.configuration import CurveConfiguration, ReducedDivisor
from curves.services import point_multiplicity
from fibers.catalog import FiberRecord
from fibers.exceptions import MuOutOfRange
from surfaces.invariants import SurfaceModel

logger = logging.getLogger(__name__)


def enumerate_reduced_subdivisors(record: FiberRecord) -> Iterator[ReducedDivisor]:
    """Every nonempty set of components, once each, smallest first."""
    ids = sorted(record.config.node_ids)
    for size in range(1, len(ids) + 1):
        for subset in combinations(ids, size):
            yield ReducedDivisor.of(subset)


def intersection_graph(cfg: CurveConfiguration, divisor: Optional[ReducedDivisor] = None) -> nx.MultiGraph:
    """Components as vertices, one edge per intersection point counted with multiplicity."""
    ids = list(divisor) if divisor is not None else sorted(cfg.node_ids)
    graph = nx.MultiGraph()
    graph.add_nodes_from(ids)
    members = set(ids)
    for a in ids:
        for b, value in cfg.neighbors(a):
            if b in members and a < b:
                graph.add_edges_from([(a, b)] * value)
    return graph


def is_tree_of_smooth_rationals(cfg: CurveConfiguration, divisor: ReducedDivisor) -> bool:
    """
    True when every component is smooth rational and the components meet
    transversally at most once pairwise with no cycle among them.
    """
    cfg.check_divisor(divisor)
    if divisor.is_zero:
        return False
    if not all(cfg.node(c).rational_smooth for c in divisor):
        return False
    graph = intersection_graph(cfg, divisor)
    # a double edge is a pair meeting twice; a triple point closes a triangle
    return nx.is_forest(nx.Graph(graph)) and graph.number_of_edges() == nx.Graph(graph).number_of_edges()


def check_elliptic_multiplicities(cfg: CurveConfiguration, divisor: ReducedDivisor,
                                  limit: Optional[int] = None) -> int:
    """
    Largest multiplicity of D at a marked point; a reduced curve on an
    elliptic surface has none above 3.
    """
    limit = settings.ELLIPTIC_MAX_POINT_MULTIPLICITY if limit is None else limit
    cfg.check_divisor(divisor)
    highest = 0
    for point in cfg.points:
        mu = point_multiplicity(cfg, divisor, point)
        if mu > limit:
            logger.warning(f"Point {point.id} has multiplicity {mu} > {limit} in an elliptic context")
            raise MuOutOfRange(f"D has multiplicity {mu} at {point.id}; at most {limit} on an elliptic surface")
        highest = max(highest, mu)
    return highest


def euler_total(records: Iterable[FiberRecord]) -> int:
    return sum(record.euler_number for record in records)


def euler_consistent(surface: SurfaceModel, records: Iterable[FiberRecord]) -> bool:
    """c₂ of an elliptic surface equals the sum of the Euler numbers of its singular fibers."""
    return surface.c2 == euler_total(records)
