"""
Tests for sub-divisor enumeration, tree detection and the (P) census.
"""
import importlib
import json
from io import StringIO
from unittest.mock import patch

from django.test import SimpleTestCase, override_settings

from cli.runner import run
from curves.configuration import CurveConfiguration, CurveNode, Incidence, LocalType, MarkedPoint
from curves.tests.factories import chain
from fibers.catalog import FiberKind, FiberType, fiber, parse_fiber_type
from fibers.exceptions import MuOutOfRange
from fibers.services import (
    CensusDivisor,
    CensusEntry,
    census,
    census_entry,
    check_elliptic_multiplicities,
    enumerate_reduced_subdivisors,
    euler_consistent,
    euler_total,
    is_tree_of_smooth_rationals,
    tree_census,
)
from surfaces.services import make_surface


class EnumerationTests(SimpleTestCase):

    def test_subset_counts(self):
        self.assertEqual(len(list(enumerate_reduced_subdivisors(fiber(FiberType(FiberKind.IN, 3))))), 7)
        self.assertEqual(len(list(enumerate_reduced_subdivisors(fiber(FiberType(FiberKind.II))))), 1)
        self.assertEqual(len(list(enumerate_reduced_subdivisors(fiber(FiberType(FiberKind.I0_STAR))))), 31)

    def test_subsets_are_distinct(self):
        subsets = [d.components for d in enumerate_reduced_subdivisors(fiber(FiberType(FiberKind.IN_STAR, 2)))]
        self.assertEqual(len(subsets), len(set(subsets)))
        self.assertNotIn(frozenset(), subsets)


class TreeShapeTests(SimpleTestCase):

    def test_chain(self):
        cfg = chain(4)
        self.assertTrue(is_tree_of_smooth_rationals(cfg, cfg.full_divisor()))

    def test_cycle(self):
        cfg = fiber(FiberType(FiberKind.IN, 3)).config
        self.assertFalse(is_tree_of_smooth_rationals(cfg, cfg.full_divisor()))

    def test_cuspidal_curve(self):
        cfg = fiber(FiberType(FiberKind.II)).config
        self.assertFalse(is_tree_of_smooth_rationals(cfg, cfg.full_divisor()))

    def test_double_intersection_and_triple_point(self):
        """I2 meets twice; IV has three curves through one point."""
        for label in ('I2', 'III', 'IV'):
            cfg = fiber(parse_fiber_type(label)).config
            self.assertFalse(is_tree_of_smooth_rationals(cfg, cfg.full_divisor()))

    def test_starred_fibers_are_trees(self):
        for label in ('I0*', 'I4*', 'IV*', 'III*', 'II*'):
            cfg = fiber(parse_fiber_type(label)).config
            self.assertTrue(is_tree_of_smooth_rationals(cfg, cfg.full_divisor()))


class CensusTests(SimpleTestCase):

    def test_cycle_has_only_full_divisor(self):
        entry = census_entry(fiber(FiberType(FiberKind.IN, 5)))
        self.assertEqual(entry.subsets, 31)
        self.assertEqual(len(entry.p_divisors), 1)
        self.assertTrue(entry.p_divisors[0].full)
        self.assertEqual(entry.p_divisors[0].d_squared, 0)

    def test_starred_types_have_no_p_divisors(self):
        for label in ('I0*', 'I2*', 'IV*', 'III*', 'II*'):
            self.assertEqual(census_entry(fiber(parse_fiber_type(label))).p_divisors, [])

    def test_full_census(self):
        """Every (P)-divisor with n ≤ 12 is a full configuration with D² = 0."""
        report = census(max_n=12, multiplicities=[2, 3], max_components=0)
        self.assertTrue(report.ok, report.violations)
        for entry in report.entries:
            starred = entry.label.endswith('*')
            self.assertEqual(entry.full_has_p, not starred, entry.label)

    @override_settings(CENSUS_MAX_N=2, CENSUS_MULTIPLE_FIBER_MULTIPLICITIES=[2], TREE_MAX_COMPONENTS=3)
    def test_defaults_come_from_settings(self):
        report = census()
        labels = [entry.label for entry in report.entries]
        self.assertIn('2I2', labels)
        self.assertNotIn('I3', labels)
        self.assertEqual(report.trees.max_components, 3)

    def _violating_census(self):
        """Patches the census module so I2 reports a partial (P)-divisor with D² = -2."""
        module = importlib.import_module('fibers.services.census')
        bogus = CensusEntry('I2', 3, [CensusDivisor(('C0',), -2, False)])
        return (
            patch.object(module, 'catalog_types', return_value=[FiberType(FiberKind.IN, 2)]),
            patch.object(module, 'census_entry', return_value=bogus),
        )

    def test_violation_is_reported(self):
        """A (P)-divisor off the full configuration fails the report."""
        types_patch, entry_patch = self._violating_census()
        with types_patch, entry_patch:
            with self.assertLogs('fibers', level='WARNING') as logs:
                report = census(max_n=2, multiplicities=[], max_components=0)
        self.assertFalse(report.ok)
        self.assertEqual(report.violations[0][0], 'I2')
        self.assertEqual(report.violations[0][1].components, ('C0',))
        self.assertEqual(report.to_dict()['violations'], [{'type': 'I2', 'components': ['C0'], 'd_squared': -2}])
        self.assertTrue(any('Census violation on I2' in line for line in logs.output))

    def test_violation_fails_the_command(self):
        """The census subcommand exits 1 and still writes the report."""
        types_patch, entry_patch = self._violating_census()
        out, err = StringIO(), StringIO()
        with types_patch, entry_patch, self.assertLogs('fibers', level='WARNING'):
            code = run(['census', '--max-n', '2', '--max-components', '0', '--json'], stdout=out, stderr=err)
        self.assertEqual(code, 1)
        document = json.loads(out.getvalue())
        self.assertFalse(document['ok'])
        self.assertEqual(document['violations'][0]['type'], 'I2')


class TreeCensusTests(SimpleTestCase):

    def test_trees_up_to_eight_components_fail(self):
        report = tree_census(8)
        self.assertEqual(report.exceptions, [])
        self.assertEqual(report.trees_by_order, {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23})


class EllipticContextTests(SimpleTestCase):

    def test_triple_point_allowed(self):
        cfg = fiber(FiberType(FiberKind.IV)).config
        self.assertEqual(check_elliptic_multiplicities(cfg, cfg.full_divisor()), 3)

    def test_quadruple_point_rejected(self):
        nodes = [CurveNode(f"C{i}", -2, True, None) for i in range(4)]
        point = MarkedPoint('p', tuple(Incidence(f"C{i}") for i in range(4)), LocalType.ORDINARY)
        cfg = CurveConfiguration.build(nodes, [point])
        with self.assertLogs('fibers', level='WARNING'):
            with self.assertRaises(MuOutOfRange):
                check_elliptic_multiplicities(cfg, cfg.full_divisor())

    def test_euler_helpers(self):
        records = [fiber(parse_fiber_type(label)) for label in ('I1',) * 12]
        self.assertEqual(euler_total(records), 12)
        surface = make_surface(0, 12, 10, 2, 1, True, True)
        self.assertTrue(euler_consistent(surface, records))
        self.assertFalse(euler_consistent(surface, records[:-1]))
