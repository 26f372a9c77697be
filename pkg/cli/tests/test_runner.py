"""
Tests for the kodaira command line: exit codes, diagnostics and JSON output.
"""
import json
import os
import tempfile
from io import StringIO

from django.test import SimpleTestCase

from cli.runner import run
from curves.api.serializers import configuration_document
from curves.tests.factories import chain, cycle

K3 = {
    'k_squared': 0, 'c2': 24, 'picard_rank': 0, 'alg_dim': 0,
    'kodaira_dim': 0, 'minimal': True, 'kaehler': True,
}
ELLIPTIC = {
    'k_squared': 0, 'c2': 12, 'picard_rank': 2, 'alg_dim': 1,
    'kodaira_dim': 1, 'minimal': True, 'kaehler': True,
}


class RunnerTestCase(SimpleTestCase):

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)

    def write(self, name, document):
        path = os.path.join(self.tmp.name, name)
        with open(path, 'w', encoding='utf-8') as fh:
            if isinstance(document, str):
                fh.write(document)
            else:
                json.dump(document, fh)
        return path

    def run_cli(self, *argv):
        out, err = StringIO(), StringIO()
        code = run(list(argv), stdout=out, stderr=err)
        return code, out.getvalue(), err.getvalue()


class CheckPTests(RunnerTestCase):

    def test_i2_passes(self):
        code, out, _ = self.run_cli('check-p', '--config', self.write('i2.json', configuration_document(cycle(2))))
        self.assertEqual(code, 0)
        self.assertIn('holds', out)

    def test_tree_fails_with_witness(self):
        path = self.write('tree.json', configuration_document(chain(3)))
        code, out, err = self.run_cli('check-p', '--config', path, '--json')
        self.assertEqual(code, 1)
        document = json.loads(out)
        self.assertFalse(document['holds'])
        self.assertEqual(document['witness_degree'], 1)
        self.assertIn(document['witness'], ('C0', 'C2'))
        self.assertIn('property (P) fails', err)

    def test_json_output_is_stable(self):
        path = self.write('i3.json', configuration_document(cycle(3)))
        first = self.run_cli('check-p', '--config', path, '--json')
        second = self.run_cli('check-p', '--config', path, '--json')
        self.assertEqual(first, second)
        self.assertEqual(json.loads(first[1])['schema'], 'kodaira-kit/1')

    def test_unknown_curve_in_divisor(self):
        path = self.write('i2.json', configuration_document(cycle(2)))
        code, _, err = self.run_cli('check-p', '--config', path, '--divisor', 'C7')
        self.assertEqual(code, 2)
        self.assertIn('C7', err)

    def test_missing_file(self):
        code, _, err = self.run_cli('check-p', '--config', os.path.join(self.tmp.name, 'absent.json'))
        self.assertEqual(code, 2)
        self.assertIn('config', err)

    def test_invalid_json(self):
        code, _, err = self.run_cli('check-p', '--config', self.write('bad.json', '{"nodes": ['))
        self.assertEqual(code, 2)
        self.assertIn('invalid JSON', err)


class DispatchTests(RunnerTestCase):

    def test_unknown_subcommand(self):
        code, out, err = self.run_cli('prove-everything')
        self.assertEqual(code, 2)
        self.assertEqual(out, '')
        self.assertIn('prove-everything', err)

    def test_no_subcommand(self):
        self.assertEqual(self.run_cli()[0], 2)

    def test_unknown_flag(self):
        code, out, _ = self.run_cli('verify-riero', '--frobnicate')
        self.assertEqual(code, 2)
        self.assertEqual(out, '')

    def test_verify_riero(self):
        code, out, _ = self.run_cli('verify-riero')
        self.assertEqual(code, 0)
        self.assertIn('residual = 0', out)

    def test_verify_riero_json(self):
        code, out, _ = self.run_cli('verify-riero', '--json')
        self.assertEqual(code, 0)
        document = json.loads(out)
        self.assertTrue(document['holds'])
        self.assertEqual(document['residual'], {})


class DeformCountTests(RunnerTestCase):

    def test_k3(self):
        surface = self.write('k3.json', K3)
        bundle = self.write('e.json', {'rank': 3, 'c1_sq': 0, 'c1_dot_K': 0, 'c2': 5})
        code, out, _ = self.run_cli('deform-count', '--surface', surface, '--bundle', bundle, '--h0', '0', '--json')
        self.assertEqual(code, 0)
        document = json.loads(out)
        self.assertEqual(document['h1_minus_h2'], 19)
        self.assertEqual(document['verdict'], 'positive_strict')

    def test_torus_equality_case_succeeds(self):
        """An exceptional equality case is a valid answer and exits 0."""
        torus = dict(K3, c2=0)
        code, out, _ = self.run_cli(
            'deform-count', '--surface', self.write('torus.json', torus),
            '--bundle', self.write('e.json', {'rank': 3, 'c1_sq': 0, 'c1_dot_K': 0, 'c2': 0}),
        )
        self.assertEqual(code, 0)
        self.assertIn('exceptional_case_i', out)

    def test_contradictory_invariants_fail(self):
        torus = dict(K3, c2=0)
        code, out, _ = self.run_cli(
            'deform-count', '--surface', self.write('torus.json', torus),
            '--bundle', self.write('e.json', {'rank': 3, 'c1_sq': 0, 'c1_dot_K': 0, 'c2': -1}), '--json',
        )
        self.assertEqual(code, 1)
        self.assertEqual(json.loads(out)['verdict'], 'out_of_hypotheses')

    def test_malformed_surface_names_field(self):
        surface = self.write('s.json', dict(K3, k_squared='zero'))
        bundle = self.write('e.json', {'rank': 3, 'c1_sq': 0, 'c1_dot_K': 0, 'c2': 0})
        code, _, err = self.run_cli('deform-count', '--surface', surface, '--bundle', bundle)
        self.assertEqual(code, 2)
        self.assertIn('surface.k_squared', err)

    def test_algebraic_surface_is_an_input_error(self):
        surface = self.write('s.json', dict(K3, alg_dim=2, picard_rank=20))
        bundle = self.write('e.json', {'rank': 3, 'c1_sq': 0, 'c1_dot_K': 0, 'c2': 0})
        code, _, err = self.run_cli('deform-count', '--surface', surface, '--bundle', bundle)
        self.assertEqual(code, 2)
        self.assertIn('OutOfHypotheses', err)


class OtherSubcommandTests(RunnerTestCase):

    def test_discriminant_on_minimal_surface(self):
        path = self.write('chain.json', {
            'surface': ELLIPTIC, 'config': configuration_document(cycle(2)), 'contractions': [],
        })
        code, out, _ = self.run_cli('discriminant', '--chain', path, '--json')
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)['certificate']['final_value'], 0)

    def test_discriminant_table(self):
        code, out, _ = self.run_cli('discriminant', '--table', '--json')
        self.assertEqual(code, 0)
        self.assertEqual(len(json.loads(out)['mueps']), 8)

    def test_enumerate_fibers(self):
        code, out, _ = self.run_cli('enumerate-fibers', '--type', 'I5', '--json')
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out.splitlines()[0])['type'], 'I5')

    def test_blow_up_then_check(self):
        path = self.write('i2.json', configuration_document(cycle(2)))
        code, out, _ = self.run_cli('blow-up', '--config', path, '--point', 'p0', '--exceptional-id', 'E', '--json')
        self.assertEqual(code, 0)
        blown = self.write('blown.json', json.loads(out)['config'])
        code, out, _ = self.run_cli('blow-down', '--config', blown, '--curve', 'E', '--json')
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)['contracted'], 'E')


class ManagementCommandTests(SimpleTestCase):

    def test_kodaira_command_dispatches(self):
        from django.core.management import call_command

        out = StringIO()
        call_command('kodaira', 'verify-riero', '--json', stdout=out)
        self.assertTrue(json.loads(out.getvalue())['holds'])
