from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import List

from deformations.exceptions import InconsistentReport


class Verdict(str, Enum):
    POSITIVE_STRICT = 'positive_strict'
    NONNEG_WITH_EQUALITY_CONDITIONS = 'nonneg_with_equality_conditions'
    EXCEPTIONAL_CASE_I = 'exceptional_case_i'
    EXCEPTIONAL_CASE_II = 'exceptional_case_ii'
    OUT_OF_HYPOTHESES = 'out_of_hypotheses'


EQUALITY_VERDICTS = (
    Verdict.NONNEG_WITH_EQUALITY_CONDITIONS,
    Verdict.EXCEPTIONAL_CASE_I,
    Verdict.EXCEPTIONAL_CASE_II,
)


@dataclass(frozen=True)
class DeformationReport:
    """
    h¹(T_X) - h²(T_X) for a conic bundle X over a non-algebraic Kähler surface,
    with the two inequalities that bound it and the resulting verdict.
    """
    h0: int
    h1_minus_h2: int
    banlep_lhs: Fraction
    banlep_ok: bool
    chern_gap: int
    witness: Fraction
    vanishings: dict
    verdict: Verdict
    notes: List[str] = field(default_factory=list)

    def __post_init__(self):
        if self.verdict is Verdict.POSITIVE_STRICT and self.h1_minus_h2 <= 0:
            raise InconsistentReport(f"positive_strict with h¹ - h² = {self.h1_minus_h2}")
        if self.verdict in EQUALITY_VERDICTS:
            if self.h1_minus_h2 != 0:
                raise InconsistentReport(f"{self.verdict.value} with h¹ - h² = {self.h1_minus_h2}")
            if not all(self.vanishings.values()):
                failing = ', '.join(name for name, ok in self.vanishings.items() if not ok)
                raise InconsistentReport(f"{self.verdict.value} but {failing} do not vanish")

    @property
    def guaranteed(self) -> bool:
        return self.verdict is Verdict.POSITIVE_STRICT

    @property
    def consistent(self) -> bool:
        """False only when the numerics contradict the hypotheses."""
        return self.verdict is not Verdict.OUT_OF_HYPOTHESES

    def to_dict(self) -> dict:
        return {
            'h0': self.h0,
            'h1_minus_h2': self.h1_minus_h2,
            'banlep_lhs': self.banlep_lhs,
            'banlep_ok': self.banlep_ok,
            'chern_gap': self.chern_gap,
            'witness': self.witness,
            'vanishings': dict(self.vanishings),
            'verdict': self.verdict.value,
            'notes': list(self.notes),
        }
