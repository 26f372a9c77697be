"""
Graded rings of Chern classes over exact rationals.

Two rings are in use. The surface ring has the classes of S and of E and
vanishes above degree 2. The ring of ℙ(E) adds the relative hyperplane class
ξ with ξ³ = e₁ξ² - e₂ξ + e₃ and vanishes above the configured truncation
degree; pulled-back classes of degree > 2 are kept there as formal symbols.
"""
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple, Union

import sympy as sp
from django.conf import settings

from chern.exceptions import DegreeMismatch, NormalFormFailure, UnsupportedRank

# c₁ := c₁(S), c₂ := c₂(S), eᵢ := cᵢ(E)
BASE_GENERATORS = (('c1', 1), ('c2', 2), ('e1', 1), ('e2', 2), ('e3', 3))
FIBER_GENERATOR = ('xi', 1)

Scalar = Union[int, Fraction, sp.Rational]
Monomial = Tuple[int, ...]


def _rational(value: Scalar) -> sp.Rational:
    if isinstance(value, Fraction):
        return sp.Rational(value.numerator, value.denominator)
    return sp.Rational(value)


def _fraction(value) -> Fraction:
    value = sp.Rational(value)
    return Fraction(int(value.p), int(value.q))


class GradedRing:
    """
    Polynomials in weighted generators modulo "power of a generator = polynomial"
    rules and truncation above `truncation_degree`.
    """

    def __init__(self, name: str, generators: Sequence[Tuple[str, int]], truncation_degree: int,
                 rules: Optional[Mapping[str, Tuple[int, str]]] = None, max_rewrites: int = 64):
        self.name = name
        self.generators = tuple(generators)
        self.symbols = tuple(sp.Symbol(n) for n, _ in self.generators)
        self.weights = tuple(d for _, d in self.generators)
        self.truncation_degree = truncation_degree
        self.max_rewrites = max_rewrites
        self._index = {n: i for i, (n, _) in enumerate(self.generators)}
        self._rules = {}
        for generator, (power, replacement) in (rules or {}).items():
            poly = self._poly(sp.sympify(replacement, locals=self.namespace))
            if any(self.monomial_degree(m) != power * self.weights[self._index[generator]]
                   for m in poly.monoms()):
                raise DegreeMismatch(f"{self.name}: rule for {generator}^{power} is not homogeneous")
            self._rules[self._index[generator]] = (power, poly)

    def __repr__(self):
        return f"GradedRing({self.name!r}, truncation={self.truncation_degree})"

    @property
    def namespace(self) -> Dict[str, sp.Symbol]:
        return {str(s): s for s in self.symbols}

    def has_generator(self, name: str) -> bool:
        return name in self._index

    def monomial_degree(self, monomial: Monomial) -> int:
        return sum(e * w for e, w in zip(monomial, self.weights))

    def _poly(self, expr) -> sp.Poly:
        return sp.Poly(expr, *self.symbols, domain=sp.QQ)

    def _from_terms(self, terms: Mapping[Monomial, object]) -> sp.Poly:
        return sp.Poly.from_dict(dict(terms) or {(0,) * len(self.symbols): 0}, *self.symbols, domain=sp.QQ)

    def _truncate(self, poly: sp.Poly) -> sp.Poly:
        kept = {m: c for m, c in poly.terms() if self.monomial_degree(m) <= self.truncation_degree}
        return self._from_terms(kept)

    def _rewrite_once(self, poly: sp.Poly) -> Tuple[sp.Poly, bool]:
        done: Dict[Monomial, object] = {}
        pending = self._from_terms({})
        changed = False
        for monom, coeff in poly.terms():
            for index, (power, replacement) in self._rules.items():
                if monom[index] >= power:
                    rest = list(monom)
                    rest[index] -= power
                    pending += self._from_terms({tuple(rest): coeff}) * replacement
                    changed = True
                    break
            else:
                done[monom] = done.get(monom, 0) + coeff
        return self._from_terms(done) + pending, changed

    def normal_form(self, value) -> 'RingElement':
        """The unique representative: no rule applies and nothing above the truncation degree."""
        if isinstance(value, RingElement):
            value = value.poly.as_expr()
        poly = self._truncate(self._poly(sp.expand(value)))
        for _ in range(self.max_rewrites):
            poly, changed = self._rewrite_once(poly)
            if not changed:
                return RingElement(self, self._truncate(poly))
        raise NormalFormFailure(f"{self.name}: no normal form after {self.max_rewrites} rewriting passes")

    def element(self, value) -> 'RingElement':
        """A ring element from a number, a sympy expression or a string such as "c1**2 - e2/3"."""
        if isinstance(value, str):
            value = sp.sympify(value, locals=self.namespace)
        elif isinstance(value, Fraction):
            value = _rational(value)
        return self.normal_form(value)

    def gen(self, name: str) -> 'RingElement':
        if name not in self._index:
            raise KeyError(f"{self.name} has no generator {name!r}")
        return self.element(self.symbols[self._index[name]])

    def one(self) -> 'RingElement':
        return self.element(1)

    def zero(self) -> 'RingElement':
        return self.element(0)

    def from_terms(self, terms: Mapping[Tuple[Tuple[str, int], ...], Scalar]) -> 'RingElement':
        """Build from {((name, exponent), ...): coefficient}; generators missing here must not occur."""
        expr = sp.Integer(0)
        for monomial, coeff in terms.items():
            term = _rational(coeff)
            for name, exponent in monomial:
                if name not in self._index:
                    raise KeyError(f"{self.name} has no generator {name!r}")
                term *= self.symbols[self._index[name]] ** exponent
            expr += term
        return self.normal_form(expr)


class RingElement:
    """A normal-form element of a GradedRing. Immutable."""

    __slots__ = ('ring', 'poly')

    def __init__(self, ring: GradedRing, poly: sp.Poly):
        self.ring = ring
        self.poly = poly

    def _coerce(self, other) -> 'RingElement':
        if isinstance(other, RingElement):
            if other.ring is not self.ring:
                raise DegreeMismatch(f"Cannot combine elements of {self.ring.name} and {other.ring.name}")
            return other
        if isinstance(other, (int, Fraction, sp.Rational)):
            return self.ring.element(_rational(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RingElement(self.ring, self.poly + other.poly)

    __radd__ = __add__

    def __neg__(self):
        return RingElement(self.ring, -self.poly)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RingElement(self.ring, self.poly - other.poly)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, sp.Rational)):
            return RingElement(self.ring, self.poly * _rational(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.ring.normal_form((self.poly * other.poly).as_expr())

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, exponent: int):
        result = self.ring.one()
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return (self.poly - other.poly).is_zero

    def __hash__(self):
        return hash((self.ring.name, tuple(sorted(self.poly.terms()))))

    def __repr__(self):
        return f"RingElement({self.ring.name}: {self})"

    def __str__(self):
        return str(self.poly.as_expr())

    @property
    def is_zero(self) -> bool:
        return self.poly.is_zero

    def monomials(self) -> Iterable[Tuple[Monomial, Fraction]]:
        for monom, coeff in self.poly.terms():
            if coeff != 0:
                yield monom, _fraction(coeff)

    def homogeneous(self, degree: int) -> 'RingElement':
        kept = {m: c for m, c in self.poly.terms() if self.ring.monomial_degree(m) == degree}
        return RingElement(self.ring, self.ring._from_terms(kept))

    def truncated(self, degree: int) -> 'RingElement':
        kept = {m: c for m, c in self.poly.terms() if self.ring.monomial_degree(m) <= degree}
        return RingElement(self.ring, self.ring._from_terms(kept))

    def components(self, up_to: int):
        return [self.homogeneous(d) for d in range(up_to + 1)]

    def constant(self) -> Fraction:
        return _fraction(self.poly.coeff_monomial(1))

    def coefficient(self, text: str) -> Fraction:
        """Coefficient of a monomial given as text, e.g. "e1*c1" or "xi**2"."""
        monomial = sp.sympify(text, locals=self.ring.namespace)
        return _fraction(self.poly.coeff_monomial(monomial))

    def degree(self) -> int:
        """Highest degree carrying a nonzero coefficient (0 for zero)."""
        return max((self.ring.monomial_degree(m) for m, _ in self.monomials()), default=0)

    def to_dict(self) -> Dict[str, Fraction]:
        """Monomial text → coefficient, in a fixed order."""
        terms = {}
        for monom, coeff in sorted(self.monomials(), key=lambda t: (self.ring.monomial_degree(t[0]), t[0])):
            factors = [
                name if e == 1 else f"{name}^{e}"
                for (name, _), e in zip(self.ring.generators, monom) if e
            ]
            terms['*'.join(factors) or '1'] = coeff
        return terms


@lru_cache(maxsize=None)
def _surface_ring(max_rewrites: int) -> GradedRing:
    return GradedRing('S', BASE_GENERATORS, truncation_degree=2, max_rewrites=max_rewrites)


def surface_ring() -> GradedRing:
    """Classes on S: everything above degree 2 vanishes."""
    return _surface_ring(settings.NORMAL_FORM_MAX_REWRITES)


@lru_cache(maxsize=None)
def _projective_bundle_ring(truncation_degree: int, max_rewrites: int) -> GradedRing:
    return GradedRing(
        'P(E)',
        BASE_GENERATORS + (FIBER_GENERATOR,),
        truncation_degree=truncation_degree,
        rules={'xi': (3, 'e1*xi**2 - e2*xi + e3')},
        max_rewrites=max_rewrites,
    )


def projective_bundle_ring(rank: int = 3) -> GradedRing:
    """ℙ of one-dimensional quotients of a rank-3 bundle E over S, with ξ = c₁(𝒪(1))."""
    if rank != 3:
        raise UnsupportedRank(f"Only rank-3 bundles are supported, got rank {rank}")
    return _projective_bundle_ring(settings.CHERN_TRUNCATION_DEGREE, settings.NORMAL_FORM_MAX_REWRITES)
