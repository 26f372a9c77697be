from fibers.services.census import (
    CensusDivisor,
    CensusEntry,
    CensusReport,
    TreeCensus,
    census,
    census_entry,
    tree_census,
    tree_configuration,
    trees_of_order,
)
from fibers.services.enumeration import (
    check_elliptic_multiplicities,
    enumerate_reduced_subdivisors,
    euler_consistent,
    euler_total,
    intersection_graph,
    is_tree_of_smooth_rationals,
)

__all__ = [
    'CensusDivisor',
    'CensusEntry',
    'CensusReport',
    'TreeCensus',
    'census',
    'census_entry',
    'check_elliptic_multiplicities',
    'enumerate_reduced_subdivisors',
    'euler_consistent',
    'euler_total',
    'intersection_graph',
    'is_tree_of_smooth_rationals',
    'tree_census',
    'tree_configuration',
    'trees_of_order',
]
