from .calculator import (
    banlep_check, chern_gap, classify, decomposition_witness, h1_minus_h2, vanishings,
)

__all__ = [
    'banlep_check', 'chern_gap', 'classify', 'decomposition_witness', 'h1_minus_h2', 'vanishings',
]
