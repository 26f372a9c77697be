"""
Tests for blow-up and blow-down calculus.
"""
import random

import sympy
from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from curves.configuration import (
    CurveConfiguration,
    CurveNode,
    Incidence,
    LocalType,
    MarkedPoint,
    ReducedDivisor,
    pair,
    validate,
)
from curves.exceptions import BadEpsilon, NotMinusOneCurve
from curves.services import (
    blow_down,
    blow_up,
    canonical_degree,
    contraction_data,
    pair_degree,
    property_P,
    pullback_divisor,
    pushforward_divisor,
    pushforward_pair_degree,
    self_intersection,
)
from curves.tests.factories import cuspidal_curve, cycle, minus_two, nodal_curve, ordinary, tangent_pair, triple_point


def two_curves_through(m1, m2, extra=0):
    """Two curves through one ordinary point with multiplicities m1, m2, plus `extra` unmarked meetings."""
    nodes = [CurveNode('A', 3, True, None), CurveNode('B', 5, True, None)]
    point = MarkedPoint('p', (Incidence('A', m1), Incidence('B', m2)), LocalType.ORDINARY)
    unmarked = {pair('A', 'B'): extra} if extra else {}
    return CurveConfiguration.build(nodes, [point], unmarked)


def random_configuration(rng, size):
    """Smooth rational curves with unmarked intersections ≤ 3; C0 is a (-1)-curve."""
    nodes = [CurveNode('C0', -1, True, None)]
    for i in range(1, size):
        smooth = rng.random() < 0.8
        nodes.append(CurveNode(f"C{i}", rng.randint(-4, 2), smooth, None, None if smooth else 1))
    unmarked = {}
    for i in range(size):
        for j in range(i + 1, size):
            if rng.random() < 0.45:
                unmarked[pair(f"C{i}", f"C{j}")] = rng.randint(1, 3)
    return CurveConfiguration.build(nodes, (), unmarked)


class BlowUpTests(SimpleTestCase):

    def test_ordinary_double_point(self):
        cfg = CurveConfiguration.build([minus_two('A'), minus_two('B')], [ordinary('p', 'A', 'B')])
        result = blow_up(cfg, 'p')
        out, e = result.config, result.exceptional_id
        self.assertEqual(out.node('A').self_int, -3)
        self.assertEqual(out.node('B').self_int, -3)
        self.assertEqual(out.intersection('A', 'B'), 0)
        self.assertEqual(out.intersection('A', e), 1)
        self.assertEqual(out.intersection('B', e), 1)
        self.assertEqual(out.node(e).self_int, -1)
        self.assertEqual(validate(out), [])

    def test_triple_point(self):
        result = blow_up(triple_point(), 'p0')
        out, e = result.config, result.exceptional_id
        for curve in ('C0', 'C1', 'C2'):
            self.assertEqual(out.node(curve).self_int, -3)
            self.assertEqual(out.intersection(curve, e), 1)
        self.assertEqual(out.intersection('C0', 'C1'), 0)
        self.assertEqual(out.intersection('C1', 'C2'), 0)

    def test_cusp(self):
        """C̃² = C² - 4, C̃·E = 2 and the strict transform is smooth rational."""
        result = blow_up(cuspidal_curve(), 'p0')
        out, e = result.config, result.exceptional_id
        self.assertEqual(out.node('C0').self_int, -4)
        self.assertEqual(out.intersection('C0', e), 2)
        self.assertTrue(out.node('C0').rational_smooth)
        self.assertEqual(out.points[0].local_type, LocalType.TANGENTIAL)

    def test_node_of_nodal_curve(self):
        result = blow_up(nodal_curve(), 'p0', exceptional_id='E')
        out = result.config
        self.assertEqual(out.node('C0').self_int, -4)
        self.assertEqual(out.intersection('C0', 'E'), 2)
        self.assertTrue(out.node('C0').rational_smooth)

    def test_tangency_becomes_triple_point(self):
        result = blow_up(tangent_pair(), 'p0')
        out, e = result.config, result.exceptional_id
        self.assertEqual(out.intersection('C0', 'C1'), 1)
        self.assertEqual(out.intersection('C0', e), 1)
        self.assertEqual(out.node('C0').self_int, -3)
        self.assertEqual(out.points[0].local_type, LocalType.TRIPLE_ORDINARY)
        self.assertEqual(validate(out), [])

    def test_excess_intersection(self):
        """C̃₁·C̃₂ = C₁·C₂ - m₁m₂ and C̃ᵢ·E = mᵢ for m ∈ {1, 2, 3}."""
        for m1 in (1, 2, 3):
            for m2 in (1, 2, 3):
                cfg = two_curves_through(m1, m2, extra=2)
                before = cfg.intersection('A', 'B')
                out = blow_up(cfg, 'p', exceptional_id='E').config
                self.assertEqual(out.intersection('A', 'B'), before - m1 * m2)
                self.assertEqual(out.intersection('A', 'E'), m1)
                self.assertEqual(out.intersection('B', 'E'), m2)
                self.assertEqual(out.node('A').self_int, 3 - m1 * m1)


class BlowDownTests(SimpleTestCase):

    def test_one_transversal_curve(self):
        cfg = CurveConfiguration.build(
            [CurveNode('E', -1, True, None), minus_two('C')], [ordinary('p', 'E', 'C')],
        )
        out = blow_down(cfg, 'E').config
        self.assertEqual(out.node('C').self_int, -1)
        self.assertFalse(out.has_node('E'))

    def test_disjoint_curves_meet_after_contraction(self):
        cfg = CurveConfiguration.build(
            [CurveNode('E', -1, True, None), minus_two('A'), minus_two('B')],
            [ordinary('p', 'E', 'A'), ordinary('q', 'E', 'B')],
        )
        out = blow_down(cfg, 'E').config
        self.assertEqual(out.intersection('A', 'B'), 1)
        self.assertEqual(validate(out), [])

    def test_curve_disjoint_from_c0_unchanged(self):
        cfg = CurveConfiguration.build(
            [CurveNode('E', -1, True, None), minus_two('A'), minus_two('B')],
            [ordinary('p', 'E', 'A')],
        )
        out = blow_down(cfg, 'E').config
        self.assertEqual(out.node('B'), minus_two('B'))

    def test_contraction_raises_arithmetic_genus(self):
        """A curve meeting the (-1)-curve three times acquires a triple point and p_a = 3."""
        cfg = CurveConfiguration.build(
            [CurveNode('E', -1, True, None), minus_two('C')], unmarked={pair('E', 'C'): 3},
        )
        down = blow_down(cfg, 'E').config
        image = down.node('C')
        self.assertEqual((image.self_int, image.genus, image.rational_smooth), (7, 3, False))
        self.assertEqual(canonical_degree(down, down.full_divisor()), -3)
        up = blow_up(down, down.points[0].id)
        restored = up.config.node('C')
        self.assertEqual((restored.self_int, restored.genus), (-2, 0))
        self.assertEqual(canonical_degree(up.config, ReducedDivisor.of(['C'])), 0)

    def test_not_minus_one(self):
        with self.assertRaises(NotMinusOneCurve):
            blow_down(cycle(3), 'C0')

    def test_round_trip_at_ordinary_points(self):
        """Contracting the exceptional curve restores intersections and self-intersections."""
        for cfg, point in ((cycle(3), 'p0'), (cycle(2), 'p1'), (triple_point(), 'p0'), (nodal_curve(), 'p0'),
                           (two_curves_through(2, 3, extra=1), 'p')):
            up = blow_up(cfg, point)
            down = blow_down(up.config, up.exceptional_id).config
            self.assertEqual(dict(down.pairwise), dict(cfg.pairwise))
            for node in cfg.nodes:
                self.assertEqual(down.node(node.id).self_int, node.self_int)
            self.assertEqual(validate(down), [])

    def test_round_trip_restores_local_types(self):
        for cfg in (triple_point(), tangent_pair(), cuspidal_curve()):
            up = blow_up(cfg, 'p0')
            down = blow_down(up.config, up.exceptional_id).config
            self.assertEqual([p.local_type for p in down.points], [p.local_type for p in cfg.points])
            self.assertEqual(dict(down.pairwise), dict(cfg.pairwise))

    def test_pushforward_pair_degree_matches_contraction(self):
        rng = random.Random(7)
        for _ in range(200):
            cfg = random_configuration(rng, rng.randint(2, 7))
            divisor = ReducedDivisor.of(c for c in cfg.node_ids if rng.random() < 0.7)
            down = blow_down(cfg, 'C0')
            image = down.push(divisor)
            for curve in image:
                self.assertEqual(
                    pushforward_pair_degree(cfg, divisor, 'C0', curve),
                    pair_degree(down.config, image, curve),
                )

    def test_property_p_preserved_under_contraction(self):
        """(P) before contracting a (-1)-curve implies (P) after, over 1000 random configurations."""
        rng = random.Random(20240817)
        checked = 0
        for _ in range(1000):
            cfg = random_configuration(rng, rng.randint(1, 10))
            divisor = ReducedDivisor.of(c for c in cfg.node_ids if rng.random() < 0.75)
            if not property_P(cfg, divisor):
                continue
            checked += 1
            down = blow_down(cfg, 'C0')
            self.assertTrue(property_P(down.config, pushforward_divisor(divisor, 'C0')).holds)
        self.assertGreater(checked, 0)

    @settings(max_examples=200, deadline=None)
    @given(st.integers(0, 10 ** 6))
    def test_square_changes_by_excess(self, seed):
        """D² = D'² - (μ - ε)² along a contraction."""
        rng = random.Random(seed)
        cfg = random_configuration(rng, rng.randint(1, 8))
        divisor = ReducedDivisor.of(c for c in cfg.node_ids if rng.random() < 0.6)
        mu, eps = contraction_data(cfg, divisor, 'C0')
        down = blow_down(cfg, 'C0')
        d_prime_sq = self_intersection(down.config, down.push(divisor))
        self.assertEqual(self_intersection(cfg, divisor), d_prime_sq - (mu - eps) ** 2)


class PullbackDivisorTests(SimpleTestCase):

    def test_identity_case(self):
        self.assertEqual(pullback_divisor(0, 0, 0, 0), (0, 0))

    def test_node_blown_up_with_exceptional_in_divisor(self):
        self.assertEqual(pullback_divisor(0, 0, 2, 1), (-1, 1))

    def test_smooth_point(self):
        self.assertEqual(pullback_divisor(4, -2, 1, 0), (3, -1))

    def test_bad_epsilon(self):
        with self.assertRaises(BadEpsilon):
            pullback_divisor(0, 0, 1, 2)

    def test_increment_identity(self):
        """D·(D-3K) - 4K² = D'·(D'-3K') - 4K'² + 4 + (μ-ε)(ε-μ-3) with K² = K'² - 1."""
        for d_sq in (-3, 0, 5):
            for d_k in (-2, 0, 3):
                for k_sq in (-2, 0):
                    for mu in range(4):
                        for eps in (0, 1):
                            up = pullback_divisor(d_sq, d_k, mu, eps)
                            lhs = up.d_squared - 3 * up.d_dot_k - 4 * (k_sq - 1)
                            rhs = d_sq - 3 * d_k - 4 * k_sq + 4 + (mu - eps) * (eps - mu - 3)
                            self.assertEqual(lhs, rhs)

    def test_increment_identity_symbolically(self):
        """The increment identity holds as polynomials in D'², D'·K', K'², μ and ε."""
        d_sq, d_k, k_sq, eps = sympy.symbols('d_sq d_k k_sq eps', integer=True)
        mu = sympy.Symbol('mu', integer=True, nonnegative=True)
        pulled = {('D', 'D'): d_sq, ('D', 'K'): d_k, ('K', 'D'): d_k, ('K', 'K'): k_sq}

        def dot(a, b):
            # (pulled-back class, coefficient of C₀); p*x·C₀ = 0 and C₀² = -1
            return pulled[a[0], b[0]] - a[1] * b[1]

        D, K = ('D', eps - mu), ('K', 1)
        lhs = dot(D, D) - 3 * dot(D, K) - 4 * dot(K, K)
        rhs = d_sq - 3 * d_k - 4 * k_sq + 4 + (mu - eps) * (eps - mu - 3)
        self.assertEqual(sympy.expand(lhs - rhs), 0)
        self.assertEqual(sympy.expand(dot(K, K) - (k_sq - 1)), 0)

        for value in (0, 1):
            up = pullback_divisor(d_sq, d_k, mu, value)
            self.assertEqual(sympy.expand(up.d_squared - dot(D, D).subs(eps, value)), 0)
            self.assertEqual(sympy.expand(up.d_dot_k - dot(D, K).subs(eps, value)), 0)
