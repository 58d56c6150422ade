''' Unit tests for the acceptance sweeps, run at reduced sizes. '''

import io
import unittest

from mock import patch
import numpy as np

from acceptance import acceptance


class TestSweeps(unittest.TestCase):

    def setUp(self):
        self.rng = np.random.RandomState(0)

    def assertPassed(self, result, name):
        self.assertEqual(result.name, name)
        self.assertGreater(result.cases, 0)
        self.assertEqual(result.failures, 0, result.first_failure)
        self.assertIsNone(result.first_failure)

    def test_sqrt_e(self):
        result = acceptance.sweep_sqrt_e(self.rng, samples=50, max_size=4)
        self.assertPassed(result, 'sqrt_e')
        self.assertEqual(result.cases, 50)

    def test_dominance(self):
        result = acceptance.sweep_dominance(self.rng, max_m=2, max_d=3,
                                            max_e=5)
        self.assertPassed(result, 'dominance')
        # {1}, {2}, {3}, {1,1}, {2,1}, {2,2}, {3,1}, {3,2}
        self.assertEqual(result.cases, 8)

    def test_monotonicity(self):
        result = acceptance.sweep_monotonicity(self.rng, pairs=20)
        self.assertPassed(result, 'monotonicity')

    def test_two_degree_exactness(self):
        result = acceptance.sweep_two_degree_exactness(self.rng, max_value=3)
        self.assertPassed(result, 'h2_exactness')
        # Nine (m1, m2) times three (r1, r2), plus the 5,5,4 example.
        self.assertEqual(result.cases, 28)

    def test_compound(self):
        result = acceptance.sweep_compound(self.rng, max_h=3, max_r=5,
                                           max_multiplicity=3)
        self.assertPassed(result, 'compound')
        # 5 * 3 + 10 * 9 + 10 * 27 profiles and the 5,2,2,1 example
        self.assertEqual(result.cases, 376)

    def test_e3k1(self):
        result = acceptance.sweep_e3k1(self.rng, max_k=7)
        self.assertPassed(result, 'e3k1')
        self.assertEqual(result.cases, 6)

    def test_continuous(self):
        result = acceptance.sweep_continuous(self.rng,
                                             instances=((2, 5), (3, 14)),
                                             max_e=20)
        self.assertPassed(result, 'continuous')
        # 16 + 11 + 4 (r, e) pairs and two grid instances
        self.assertEqual(result.cases, 33)

    def test_conjecture(self):
        result = acceptance.sweep_conjecture(self.rng,
                                             instances=((2, 2), (3, 4)))
        self.assertPassed(result, 'conjecture')

    def test_cmatrix(self):
        result = acceptance.sweep_cmatrix(self.rng, samples=50)
        self.assertPassed(result, 'cmatrix')

    def test_vertex(self):
        result = acceptance.sweep_vertex(self.rng, samples=30)
        self.assertPassed(result, 'vertex')
        self.assertEqual(result.cases, 30)


class TestMain(unittest.TestCase):

    def test_run_sweeps(self):
        frame = acceptance.run_sweeps(['e3k1', 'h2_exactness'],
                                      progress=False)
        self.assertEqual(list(frame['name']), ['e3k1', 'h2_exactness'])
        self.assertTrue(frame['passed'].all())

    def test_main(self):
        with patch('sys.stdout', new_callable=io.StringIO) as stdout:
            code = acceptance.main(['--only', 'e3k1', '--quiet'])
        self.assertEqual(code, 0)
        self.assertIn('e3k1', stdout.getvalue())

    def test_main_failure(self):
        failing = acceptance.SweepResult('e3k1', 1, 1, 'k=2', 0.0)
        with patch.dict(acceptance.SWEEPS,
                        {'e3k1': lambda rng, progress: failing}):
            with patch('sys.stdout', new_callable=io.StringIO):
                code = acceptance.main(['--only', 'e3k1', '--quiet'])
        self.assertEqual(code, 1)

    def test_unknown_sweep(self):
        with patch('sys.stderr', new_callable=io.StringIO):
            with self.assertRaises(SystemExit):
                acceptance.get_parser().parse_args(['--only', 'nothing'])


if __name__ == '__main__':
    unittest.main()
