"""
Tests for configuration invariants and the JSON document.
"""
from django.test import SimpleTestCase

from curves.api.serializers import (
    CurveConfigurationSerializer,
    configuration_document,
)
from curves.configuration import CurveConfiguration, CurveNode, Incidence, LocalType, MarkedPoint, validate
from curves.exceptions import UnsupportedLocalType
from curves.tests.factories import cycle, minus_two, ordinary, triple_point


def kinds(violations):
    return [v.kind for v in violations]


class ValidateTests(SimpleTestCase):

    def test_i2_is_consistent(self):
        """Two curves meeting at two marked points."""
        self.assertEqual(validate(cycle(2)), [])

    def test_triple_point_is_consistent(self):
        self.assertEqual(validate(triple_point()), [])

    def test_inconsistent_intersection(self):
        """pairwise disagreeing with the marked points is reported."""
        cfg = cycle(3)
        pairwise = dict(cfg.pairwise)
        pairwise[('C0', 'C1')] = pairwise[('C1', 'C0')] = 3
        broken = CurveConfiguration(cfg.nodes, pairwise, cfg.points, cfg.unmarked)
        self.assertIn('InconsistentIntersection', kinds(validate(broken)))

    def test_symmetry_violation(self):
        cfg = cycle(3)
        pairwise = dict(cfg.pairwise)
        pairwise[('C1', 'C0')] = 2
        broken = CurveConfiguration(cfg.nodes, pairwise, cfg.points, cfg.unmarked)
        self.assertIn('SymmetryViolation', kinds(validate(broken)))

    def test_unknown_curve_in_point(self):
        cfg = CurveConfiguration.build([minus_two('C0')], [ordinary('p', 'C0', 'C9')])
        self.assertIn('UnknownCurve', kinds(validate(cfg)))

    def test_triple_point_shape(self):
        """A triple point with two curves is malformed."""
        point = MarkedPoint('p', (Incidence('C0'), Incidence('C1')), LocalType.TRIPLE_ORDINARY)
        cfg = CurveConfiguration.build([minus_two('C0'), minus_two('C1')], [point])
        self.assertIn('BadLocalType', kinds(validate(cfg)))

    def test_cusp_needs_multiplicity_two(self):
        point = MarkedPoint('p', (Incidence('C0', 1),), LocalType.CUSP_ON_CURVE)
        cfg = CurveConfiguration.build([CurveNode('C0', 0, False, 'cusp')], [point])
        self.assertIn('BadLocalType', kinds(validate(cfg)))

    def test_duplicate_ids(self):
        cfg = CurveConfiguration.build([minus_two('C0'), minus_two('C0')])
        self.assertIn('DuplicateId', kinds(validate(cfg)))

    def test_unsupported_local_type(self):
        with self.assertRaises(UnsupportedLocalType):
            LocalType.parse('tacnode')


class ConfigurationDocumentTests(SimpleTestCase):

    def setUp(self):
        self.document = {
            'schema': 'kodaira-kit/1',
            'nodes': [
                {'id': 'C0', 'self_int': -2},
                {'id': 'C1', 'self_int': -2},
            ],
            'points': [],
            'pairwise': [{'curves': ['C0', 'C1'], 'intersection': 2, 'unmarked': 2}],
        }

    def test_load_fills_reverse_order(self):
        serializer = CurveConfigurationSerializer(data=self.document)
        self.assertTrue(serializer.is_valid(), serializer.errors)
        cfg = serializer.save()
        self.assertEqual(cfg.intersection('C1', 'C0'), 2)
        self.assertEqual(validate(cfg), [])

    def test_explicit_asymmetry_is_kept_for_validate(self):
        self.document['pairwise'].append({'curves': ['C1', 'C0'], 'intersection': 1})
        serializer = CurveConfigurationSerializer(data=self.document)
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertIn('SymmetryViolation', kinds(validate(serializer.save())))

    def test_unknown_local_type_names_field(self):
        self.document['points'] = [{
            'id': 'p', 'local_type': 'tacnode', 'incidences': [{'curve': 'C0'}],
        }]
        serializer = CurveConfigurationSerializer(data=self.document)
        self.assertFalse(serializer.is_valid())
        self.assertIn('points', serializer.errors)

    def test_wrong_schema(self):
        serializer = CurveConfigurationSerializer(data={**self.document, 'schema': 'other/2'})
        self.assertFalse(serializer.is_valid())
        self.assertIn('schema', serializer.errors)

    def test_document_reloads_to_same_configuration(self):
        cfg = cycle(4)
        serializer = CurveConfigurationSerializer(data=configuration_document(cfg))
        self.assertTrue(serializer.is_valid(), serializer.errors)
        reloaded = serializer.save()
        self.assertEqual(dict(reloaded.pairwise), dict(cfg.pairwise))
        self.assertEqual(reloaded.nodes, cfg.nodes)
        self.assertEqual(reloaded.points, cfg.points)

    def test_negative_genus(self):
        cfg = CurveConfiguration.build([CurveNode('C0', 0, False, None, genus=-1)])
        self.assertIn('BadGenus', kinds(validate(cfg)))

    def test_tagged_curve_has_genus_one(self):
        """A nodal rational curve cannot also record genus 2."""
        point = MarkedPoint('p', (Incidence('C0', 2),), LocalType.ORDINARY)
        cfg = CurveConfiguration.build([CurveNode('C0', 0, False, 'node', genus=2)], [point])
        self.assertIn('BadGenus', kinds(validate(cfg)))
