from .property_p import (
    PropertyResult,
    arithmetic_genus,
    canonical_degree,
    contraction_data,
    intersection_form,
    pair_degree,
    pair_degrees,
    point_multiplicity,
    property_P,
    pushforward_pair_degree,
    self_intersection,
)
from .blowups import (
    BlowDownResult,
    BlowUpResult,
    PulledBack,
    blow_down,
    blow_up,
    pullback_divisor,
    pushforward_divisor,
)

__all__ = [
    'PropertyResult', 'arithmetic_genus', 'canonical_degree', 'contraction_data',
    'intersection_form', 'pair_degree', 'pair_degrees', 'point_multiplicity', 'property_P',
    'pushforward_pair_degree', 'self_intersection',
    'BlowDownResult', 'BlowUpResult', 'PulledBack', 'blow_down', 'blow_up',
    'pullback_divisor', 'pushforward_divisor',
]
