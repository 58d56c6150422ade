"""Tests for chainspec.cmatrix"""

import math
import unittest
from fractions import Fraction

import numpy as np
from numpy.testing import assert_allclose, assert_array_equal

from chainspec import cmatrix
from chainspec.bipartite_core import chain_from_degrees
from chainspec.chainspec_exceptions import InvalidInputError
from chainspec.cmatrix import CVector


def _random_degrees(max_m=7, max_d=9):
    m = np.random.randint(1, max_m + 1)
    return sorted(np.random.randint(1, max_d + 1, m).tolist(), reverse=True)


class TestCVector(unittest.TestCase):

    def test_properties(self):
        c = CVector([3, Fraction(2, 1), Fraction(1, 2), 0])
        self.assertEqual(c.entries, (3, 2, Fraction(1, 2), 0))
        self.assertIsInstance(c[1], int)
        self.assertEqual(c.p, 4)
        self.assertEqual(c.h, 3)
        self.assertEqual(c.positive, CVector([3, 2, Fraction(1, 2)]))
        self.assertEqual(CVector([0, 0]).positive, CVector([0]))

    def test_as_array(self):
        self.assertEqual(CVector([3, 1]).as_array().dtype, np.int64)
        assert_allclose(CVector([1.5, 1]).as_array(), [1.5, 1.0])

    def test_invalid(self):
        for entries in ([], [1, 2], [1, -1], ['a'], [float('nan')], [True]):
            with self.assertRaises(InvalidInputError):
                CVector(entries)


class TestCMatrix(unittest.TestCase):

    def setUp(self):
        np.random.seed(7)

    def test_build(self):
        assert_array_equal(cmatrix.build_cmatrix([3, 1]), [[3, 1], [1, 1]])
        assert_array_equal(cmatrix.build_cmatrix([2, 2, 0]),
                           [[2, 2, 0], [2, 2, 0], [0, 0, 0]])

    def test_eigenvalues(self):
        assert_allclose(cmatrix.cmatrix_eigenvalues([3, 1]),
                        [2 + math.sqrt(2), 2 - math.sqrt(2)])

    def test_rank(self):
        self.assertEqual(cmatrix.cmatrix_rank([3, 3, 0]), 1)
        self.assertEqual(cmatrix.cmatrix_rank([3, 1, 0]), 2)
        self.assertEqual(cmatrix.cmatrix_rank([5, 2, 2, 1]), 3)
        for _ in range(30):
            c = _random_degrees() + [0]
            self.assertEqual(cmatrix.numerical_rank(c),
                             cmatrix.cmatrix_rank(c))

    def test_chain_gram_matrix(self):
        for _ in range(30):
            d = _random_degrees()
            chain = chain_from_degrees(d)
            assert_array_equal(chain @ chain.T, cmatrix.build_cmatrix(d))

    def test_trace_identities(self):
        identities = cmatrix.trace_identities([3, 1])
        self.assertEqual(identities, (4, 12, 2))
        for _ in range(30):
            c = _random_degrees()
            values = cmatrix.cmatrix_eigenvalues(c)
            identities = cmatrix.trace_identities(c)
            self.assertAlmostEqual(values.sum(), identities.e)
            self.assertAlmostEqual((values ** 2).sum(), identities.s2,
                                   places=6)
            pairs = (values.sum() ** 2 - (values ** 2).sum()) / 2
            self.assertAlmostEqual(pairs, identities.beta, places=6)

    def test_trace_identities_exact(self):
        identities = cmatrix.trace_identities([Fraction(3, 2), 1])
        self.assertEqual(identities.e, Fraction(5, 2))
        self.assertEqual(identities.beta, Fraction(1, 2))


class TestBounds(unittest.TestCase):

    def setUp(self):
        np.random.seed(9)

    def test_est1(self):
        self.assertAlmostEqual(cmatrix.bound_est1([3, 1]), math.sqrt(12))
        self.assertAlmostEqual(cmatrix.bound_est1([3, 2, 1]), math.sqrt(26))

    def test_maxest_examples(self):
        self.assertAlmostEqual(cmatrix.bound_maxest([3, 1]), 2 + math.sqrt(2))
        self.assertAlmostEqual(cmatrix.bound_maxest([3, 2, 1]),
                               (3 + math.sqrt(21)) / 1.5)

    def test_maxest_needs_two_values(self):
        with self.assertRaises(InvalidInputError):
            cmatrix.bound_maxest([2, 2])
        with self.assertRaises(InvalidInputError):
            cmatrix.maxest_value(6, 5, 1)

    def test_maxest_increases_towards_est1(self):
        values = [cmatrix.maxest_value(6, 5, h) for h in range(2, 20)]
        self.assertTrue(np.all(np.diff(values) > 0))
        self.assertLess(values[-1], math.sqrt(26))
        self.assertAlmostEqual(cmatrix.maxest_value(6, 5, 10 ** 6),
                               math.sqrt(26), places=4)

    def test_bound_order(self):
        for _ in range(50):
            d = _random_degrees()
            if len(set(d)) < 2:
                continue
            top = cmatrix.cmatrix_eigenvalues(d)[0]
            maxest = cmatrix.bound_maxest(d)
            self.assertLessEqual(top, maxest + 1e-9)
            self.assertLessEqual(maxest, cmatrix.bound_est1(d) + 1e-9)
            if len(set(d)) == 2:
                self.assertAlmostEqual(top, maxest)


class TestConvexDecomposition(unittest.TestCase):

    def test_three_vertices(self):
        decomposition = cmatrix.convex_decomposition([5, 2, 2, 1])
        self.assertEqual(decomposition.base_degree, 1)
        self.assertEqual(decomposition.excess, 6)
        self.assertEqual(decomposition.excess_profile, (4, 1, 1))
        self.assertEqual(decomposition.s, 3)
        self.assertEqual(decomposition.vertices,
                         (CVector([7, 1, 1, 1]), CVector([4, 4, 1, 1]),
                          CVector([3, 3, 3, 1])))
        self.assertEqual(decomposition.coefficients,
                         (Fraction(1, 2), 0, Fraction(1, 2)))

    def test_two_distinct_degrees(self):
        decomposition = cmatrix.convex_decomposition([5, 5, 4])
        self.assertEqual(decomposition.vertices,
                         (CVector([6, 4, 4]), CVector([5, 5, 4])))
        self.assertEqual(decomposition.coefficients, (0, 1))
        decomposition = cmatrix.convex_decomposition([3, 2])
        self.assertEqual(decomposition.vertices, (CVector([3, 2]),))
        self.assertEqual(decomposition.coefficients, (1,))

    def test_fractional_vertices(self):
        decomposition = cmatrix.convex_decomposition([3, 2, 1])
        self.assertEqual(decomposition.vertices,
                         (CVector([4, 1, 1]),
                          CVector([Fraction(5, 2), Fraction(5, 2), 1])))
        self.assertEqual(decomposition.coefficients,
                         (Fraction(1, 3), Fraction(2, 3)))

    def test_invalid(self):
        for d in ([3, 3], [2, 0], [Fraction(5, 2), 1]):
            with self.assertRaises(InvalidInputError):
                cmatrix.convex_decomposition(d)

    def test_vertex_eigenvalue(self):
        decomposition = cmatrix.convex_decomposition([5, 2, 2, 1])
        for k, vertex in enumerate(decomposition.vertices, start=1):
            self.assertAlmostEqual(
                cmatrix.vertex_eigenvalue(vertex, 4, k, 1, 6),
                cmatrix.cmatrix_eigenvalues(vertex)[0])
        self.assertAlmostEqual(
            cmatrix.vertex_eigenvalue(decomposition.vertices[0], 4, 1, 1, 6),
            5 + math.sqrt(7))
        self.assertEqual(cmatrix.vertex_eigenvalue([3, 3], 2, 2, 2, 2), 6.0)

    def test_vertex_eigenvalue_invalid(self):
        with self.assertRaises(InvalidInputError):
            cmatrix.vertex_eigenvalue([7, 1, 1, 1], 4, 2, 1, 6)
        with self.assertRaises(InvalidInputError):
            cmatrix.vertex_eigenvalue([7, 1, 1, 1], 4, 0, 1, 6)

    def test_vertex_bound(self):
        self.assertAlmostEqual(cmatrix.vertex_bound([5, 2, 2, 1]),
                               5 + math.sqrt(19))

    def test_convexity(self):
        np.random.seed(13)
        for _ in range(50):
            d = _random_degrees()
            if len(set(d)) < 2:
                continue
            decomposition = cmatrix.convex_decomposition(d)
            combined = sum(
                float(alpha) * cmatrix.cmatrix_eigenvalues(vertex)[0]
                for alpha, vertex in zip(decomposition.coefficients,
                                         decomposition.vertices))
            top = cmatrix.cmatrix_eigenvalues(d)[0]
            self.assertLessEqual(top, combined + 1e-9)
            self.assertLessEqual(combined, cmatrix.vertex_bound(d) + 1e-9)


if __name__ == '__main__':
    unittest.main()
