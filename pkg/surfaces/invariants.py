"""
Numerical models of compact complex surfaces and their divisor lattices.

A surface is carried only by its invariants. c₁(S) is always -K_S: every
operation takes intersection numbers against K and negates where a formula
is written in c₁(S).
"""
from dataclasses import dataclass
from typing import Sequence, Tuple

from sympy import ImmutableMatrix

from surfaces.exceptions import DimensionMismatch, InvalidSurface


@dataclass(frozen=True)
class SurfaceModel:
    k_squared: int
    c2: int
    chi_O: int
    picard_rank: int
    alg_dim: int
    kodaira_dim: int
    minimal: bool
    kaehler: bool

    @property
    def is_algebraic(self) -> bool:
        return self.alg_dim == 2

    def blown_up(self) -> 'SurfaceModel':
        """The surface after blowing up one point."""
        return SurfaceModel(
            k_squared=self.k_squared - 1,
            c2=self.c2 + 1,
            chi_O=self.chi_O,
            picard_rank=self.picard_rank + 1,
            alg_dim=self.alg_dim,
            kodaira_dim=self.kodaira_dim,
            minimal=False,
            kaehler=self.kaehler,
        )

    def to_dict(self) -> dict:
        return {
            'k_squared': self.k_squared,
            'c2': self.c2,
            'chi_O': self.chi_O,
            'picard_rank': self.picard_rank,
            'alg_dim': self.alg_dim,
            'kodaira_dim': self.kodaira_dim,
            'minimal': self.minimal,
            'kaehler': self.kaehler,
        }


@dataclass(frozen=True)
class BundleInvariants:
    """Rank and Chern numbers of a vector bundle E on a surface.

    c1_dot_K is c₁(E)·K_S, so c₁(E)·c₁(S) = -c1_dot_K.
    """
    rank: int
    c1_sq: int
    c1_dot_K: int
    c2: int

    def __post_init__(self):
        if self.rank < 1:
            raise InvalidSurface(f"Bundle rank must be positive, got {self.rank}")

    @property
    def c1_dot_c1S(self) -> int:
        return -self.c1_dot_K

    def to_dict(self) -> dict:
        return {
            'rank': self.rank,
            'c1_sq': self.c1_sq,
            'c1_dot_K': self.c1_dot_K,
            'c2': self.c2,
        }


class IntersectionForm:
    """Symmetric integer pairing on a rank-n lattice, fixed at construction."""

    def __init__(self, matrix: Sequence[Sequence[int]]):
        rows = [tuple(int(v) for v in row) for row in matrix]
        rank = len(rows)
        if rank == 0 or any(len(row) != rank for row in rows):
            raise DimensionMismatch("Intersection matrix must be square and nonempty")
        self._matrix = ImmutableMatrix(rows)
        if not self._matrix.is_symmetric():
            raise InvalidSurface("Intersection matrix must be symmetric")

    @property
    def rank(self) -> int:
        return self._matrix.rows

    @property
    def matrix(self) -> ImmutableMatrix:
        return self._matrix

    def entry(self, i: int, j: int) -> int:
        return int(self._matrix[i, j])

    def __eq__(self, other):
        return isinstance(other, IntersectionForm) and self._matrix == other._matrix

    def __hash__(self):
        return hash(self._matrix)

    def __repr__(self):
        return f"IntersectionForm({self._matrix.tolist()})"


@dataclass(frozen=True)
class DivisorClass:
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'coeffs', tuple(int(c) for c in self.coeffs))

    def __len__(self):
        return len(self.coeffs)

    def __add__(self, other: 'DivisorClass') -> 'DivisorClass':
        if len(self) != len(other):
            raise DimensionMismatch(f"Cannot add classes of length {len(self)} and {len(other)}")
        return DivisorClass(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: 'DivisorClass') -> 'DivisorClass':
        return self + other.scaled(-1)

    def scaled(self, factor: int) -> 'DivisorClass':
        return DivisorClass(tuple(factor * c for c in self.coeffs))

    def as_column(self) -> ImmutableMatrix:
        return ImmutableMatrix(len(self.coeffs), 1, list(self.coeffs))
