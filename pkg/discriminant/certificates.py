"""
Value objects for the blow-down induction: one step per contraction and the
certificate that sums them.
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Optional, Tuple

from discriminant.exceptions import ChainBroken


class CaseLabel(str, Enum):
    ADMISSIBLE = 'admissible'
    MU3_EXCLUDED = 'mu3_excluded'
    MU2EPS0_EXCLUDED = 'mu2eps0_excluded'
    PIMP_EXCLUDED = 'pimp_excluded'


def increment(mu: int, eps: int) -> int:
    """Change of D·(D - 3K) - 4K² when a (-1)-curve is blown back up."""
    return 4 + (mu - eps) * (eps - mu - 3)


@dataclass(frozen=True)
class InductionStep:
    mu: int
    eps: int
    delta_value: int
    case_label: CaseLabel
    contracted: Optional[str] = None

    def __post_init__(self):
        if self.delta_value != increment(self.mu, self.eps):
            raise ChainBroken(f"delta_value {self.delta_value} != increment({self.mu}, {self.eps})")

    @classmethod
    def for_pair(cls, mu: int, eps: int, case_label: CaseLabel, contracted: Optional[str] = None):
        return cls(mu, eps, increment(mu, eps), CaseLabel(case_label), contracted)

    def to_dict(self) -> Dict:
        return {
            'contracted': self.contracted,
            'mu': self.mu,
            'eps': self.eps,
            'delta_value': self.delta_value,
            'case_label': self.case_label.value,
        }


@dataclass(frozen=True)
class Certificate:
    chain: Tuple[InductionStep, ...]
    base_value: int
    final_value: int
    verdict: bool
    top_d_squared: Optional[int] = None
    top_d_dot_k: Optional[int] = None
    notes: Tuple[str, ...] = field(default=())

    @classmethod
    def build(cls, chain, base_value: int, **extra) -> 'Certificate':
        chain = tuple(chain)
        final_value = base_value + sum(step.delta_value for step in chain)
        return cls(chain, base_value, final_value, final_value >= 0, **extra)

    @property
    def recomputed_final(self) -> int:
        return self.base_value + sum(step.delta_value for step in self.chain)

    def to_dict(self) -> Dict:
        return {
            'chain': [step.to_dict() for step in self.chain],
            'base_value': self.base_value,
            'final_value': self.final_value,
            'verdict': self.verdict,
            'top_d_squared': self.top_d_squared,
            'top_d_dot_k': self.top_d_dot_k,
            'notes': list(self.notes),
        }


@dataclass(frozen=True)
class A0Decision:
    """Outcome for a(S) = 0: verdict is true exactly for the zero divisor."""
    verdict: bool
    witness: Optional[str] = None
    witness_degree: Optional[int] = None

    def __bool__(self):
        return self.verdict

    def to_dict(self) -> Dict:
        return {'verdict': self.verdict, 'witness': self.witness, 'witness_degree': self.witness_degree}
