"""Tests for chainspec.bipartite_core"""

import itertools
import os
import unittest

from mock import patch
import numpy as np
from numpy.testing import assert_array_equal

from chainspec import bipartite_core as bc
from chainspec.bipartite_core import DegreeSequence, FerrersProfile
from chainspec.chainspec_exceptions import (InvalidInputError,
                                            ResourceLimitError)

FIGURE_MATRIX = np.array([[1, 1, 1, 1, 1],
                          [1, 1, 0, 0, 0],
                          [1, 1, 0, 0, 0],
                          [1, 0, 0, 0, 0]])


def _random_degrees(max_m, max_d):
    m = np.random.randint(1, max_m + 1)
    return DegreeSequence(
        sorted(np.random.randint(1, max_d + 1, m).tolist(), reverse=True))


class TestDegreeSequence(unittest.TestCase):

    def test_properties(self):
        degrees = DegreeSequence([5, 2, 2, 1])
        self.assertEqual(degrees.degrees, (5, 2, 2, 1))
        self.assertEqual(degrees.m, 4)
        self.assertEqual(degrees.e, 10)
        self.assertEqual(len(degrees), 4)
        self.assertEqual(degrees[0], 5)
        self.assertEqual(str(degrees), '5,2,2,1')

    def test_invalid(self):
        with self.assertRaises(InvalidInputError):
            DegreeSequence([])
        with self.assertRaises(InvalidInputError):
            DegreeSequence([2, 0])
        with self.assertRaises(InvalidInputError):
            DegreeSequence([1, 2])
        with self.assertRaises(InvalidInputError):
            DegreeSequence([2.5, 1])
        with self.assertRaises(ValueError):
            DegreeSequence([-1])

    def test_parse(self):
        self.assertEqual(DegreeSequence.parse(' 5, 2,2 ,1\n'),
                         DegreeSequence([5, 2, 2, 1]))
        self.assertEqual(DegreeSequence.parse(str(DegreeSequence([3]))),
                         DegreeSequence([3]))
        for text in ('5,0', '5,a', '2,3', '', '5,,1', '-1', '1.5'):
            with self.assertRaises(InvalidInputError):
                DegreeSequence.parse(text)

    def test_parse_non_ascii_digits(self):
        for text in ('5,\u00b2', '\u00b3', '5,\u0663', '\uff15'):
            with self.subTest(text=text):
                with self.assertRaises(InvalidInputError):
                    DegreeSequence.parse(text)

    def test_from_unsorted(self):
        self.assertEqual(DegreeSequence.from_unsorted([1, 0, 3, 2]),
                         DegreeSequence([3, 2, 1]))

    def test_equality_and_hash(self):
        self.assertEqual(DegreeSequence([2, 1]), DegreeSequence((2, 1)))
        self.assertNotEqual(DegreeSequence([2, 1]), (2, 1))
        self.assertEqual(len({DegreeSequence([2, 1]),
                              DegreeSequence([2, 1])}), 1)


class TestChainFromDegrees(unittest.TestCase):

    def test_figure_example(self):
        assert_array_equal(bc.chain_from_degrees([5, 2, 2, 1]),
                           FIGURE_MATRIX)

    def test_single_row(self):
        assert_array_equal(bc.chain_from_degrees([3]), [[1, 1, 1]])

    def test_equal_degrees(self):
        assert_array_equal(bc.chain_from_degrees([2, 2]), np.ones((2, 2)))

    def test_row_and_column_sums(self):
        for m in range(1, 7):
            for degrees in itertools.combinations_with_replacement(
                    range(6, 0, -1), m):
                matrix = bc.chain_from_degrees(degrees)
                assert_array_equal(matrix.sum(axis=1), degrees)
                self.assertEqual(
                    tuple(matrix.sum(axis=0)),
                    bc.conjugate_degrees(degrees).degrees)


class TestFerrersProfile(unittest.TestCase):

    def test_examples(self):
        profile = bc.ferrers_profile([5, 2, 2, 1])
        self.assertEqual(profile.r, (5, 2, 1))
        self.assertEqual(profile.m, (1, 2, 1))
        self.assertEqual(profile.h, 3)
        self.assertEqual(bc.ferrers_profile([4, 4, 4]),
                         FerrersProfile((4,), (3,)))
        self.assertEqual(bc.ferrers_profile([5, 5, 4]),
                         FerrersProfile((5, 4), (2, 1)))

    def test_to_degrees(self):
        self.assertEqual(FerrersProfile((5, 2, 1), (1, 2, 1)).to_degrees(),
                         DegreeSequence([5, 2, 2, 1]))

    def test_invalid(self):
        with self.assertRaises(InvalidInputError):
            FerrersProfile((2, 3), (1, 1))
        with self.assertRaises(InvalidInputError):
            FerrersProfile((3,), (1, 1))
        with self.assertRaises(InvalidInputError):
            FerrersProfile((3, 1), (1, 0))

    def test_conjugate(self):
        self.assertEqual(
            bc.conjugate_profile(FerrersProfile((5, 2, 1), (1, 2, 1))),
            FerrersProfile((4, 3, 1), (1, 1, 3)))
        self.assertEqual(bc.conjugate_profile(FerrersProfile((6,), (2,))),
                         FerrersProfile((2,), (6,)))

    def test_conjugate_involution(self):
        profile = FerrersProfile((5, 4), (2, 1))
        self.assertEqual(
            bc.conjugate_profile(bc.conjugate_profile(profile)), profile)
        np.random.seed(3)
        for _ in range(100):
            profile = bc.ferrers_profile(_random_degrees(8, 8))
            self.assertEqual(
                bc.conjugate_profile(bc.conjugate_profile(profile)), profile)


class TestDominance(unittest.TestCase):

    def setUp(self):
        np.random.seed(0)

    def test_examples(self):
        self.assertTrue(bc.dominates([3, 2], [2, 2]))
        self.assertFalse(bc.dominates([3, 2], [3, 2]))
        self.assertFalse(bc.dominates([3, 1], [2, 2]))
        self.assertTrue(bc.dominates([5, 2, 2, 1], [5, 2, 2]))
        self.assertFalse(bc.dominates([5, 2, 2], [5, 2, 2, 1]))

    def test_strict_partial_order(self):
        for _ in range(300):
            a, b, c = (_random_degrees(3, 3) for _ in range(3))
            self.assertFalse(bc.dominates(a, a))
            if bc.dominates(a, b):
                self.assertFalse(bc.dominates(b, a))
                if bc.dominates(b, c):
                    self.assertTrue(bc.dominates(a, c))


class TestPatterns(unittest.TestCase):

    def test_is_complete_pattern(self):
        self.assertTrue(bc.is_complete_pattern(np.ones((2, 3))))
        self.assertFalse(bc.is_complete_pattern(FIGURE_MATRIX))
        self.assertTrue(bc.is_complete_pattern([[1]]))

    def test_is_complete_pattern_isolated(self):
        with self.assertRaises(InvalidInputError):
            bc.is_complete_pattern([[1, 0], [0, 0]])
        with self.assertRaises(InvalidInputError):
            bc.is_complete_pattern([[1, 0], [1, 0]])

    def test_as_matrix_invalid(self):
        with self.assertRaises(InvalidInputError):
            bc.as_matrix([1, 0])
        with self.assertRaises(InvalidInputError):
            bc.as_matrix([[2, 0]])
        with self.assertRaises(InvalidInputError):
            bc.as_matrix(np.zeros((0, 3)))

    def test_adjacency_matrix(self):
        adjacency = bc.adjacency_matrix([[1, 1], [1, 0]])
        expected = np.array([[0, 0, 1, 1],
                             [0, 0, 1, 0],
                             [1, 1, 0, 0],
                             [1, 0, 0, 0]])
        assert_array_equal(adjacency, expected)

    def test_left_justify(self):
        assert_array_equal(bc.left_justify([[0, 1, 1], [0, 0, 1]]),
                           [[1, 1, 0], [1, 0, 0]])

    def test_canonical_form_of_permuted_chain(self):
        np.random.seed(5)
        chain = bc.chain_from_degrees([5, 2, 2, 1])
        for _ in range(20):
            permuted = chain[np.random.permutation(4)][
                :, np.random.permutation(5)]
            assert_array_equal(bc.canonical_form(permuted), chain)

    def test_canonical_form_not_chain(self):
        matrix = np.array([[1, 1, 1], [1, 1, 0], [0, 0, 1]])
        self.assertFalse(np.array_equal(
            bc.canonical_form(matrix), bc.chain_from_degrees([3, 2, 1])))

    def test_one_vertex_extension(self):
        self.assertTrue(bc.is_one_vertex_extension([5, 5, 4]))
        self.assertTrue(bc.is_one_vertex_extension([4, 3, 3]))
        self.assertFalse(bc.is_one_vertex_extension([3, 3, 1, 1]))
        self.assertFalse(bc.is_one_vertex_extension([5, 2, 2, 1]))
        self.assertFalse(bc.is_one_vertex_extension([2, 2]))

    def test_isomorphic_chains(self):
        self.assertTrue(bc.are_isomorphic_chains([3, 2], [2, 2, 1]))
        self.assertTrue(bc.are_isomorphic_chains([5, 5, 4], [5, 5, 4]))
        self.assertTrue(bc.are_isomorphic_chains([5, 5, 4], [3, 3, 3, 3, 2]))
        self.assertFalse(bc.are_isomorphic_chains([3, 2], [4, 1]))


class TestGraphs(unittest.TestCase):

    def test_to_graph(self):
        graph = bc.to_graph(FIGURE_MATRIX)
        self.assertEqual(graph.number_of_nodes(), 9)
        self.assertEqual(graph.number_of_edges(), 10)
        self.assertEqual(graph.nodes[('v', 0)]['bipartite'], 0)
        self.assertEqual(graph.nodes[('w', 4)]['bipartite'], 1)
        self.assertTrue(graph.has_edge(('v', 3), ('w', 0)))

    def test_components(self):
        matrix = np.array([[1, 1, 0],
                           [1, 0, 0],
                           [0, 0, 1]])
        self.assertFalse(bc.is_connected(matrix))
        self.assertTrue(bc.is_connected(FIGURE_MATRIX))
        components = bc.component_degree_sequences(matrix)
        self.assertEqual(components,
                         [DegreeSequence([2, 1]), DegreeSequence([1])])
        for component in components:
            self.assertTrue(bc.dominates([2, 1, 1], component))


class TestEnumerateChainCandidates(unittest.TestCase):

    def test_examples(self):
        self.assertEqual(bc.enumerate_chain_candidates(2, 2, 3),
                         [DegreeSequence([2, 1])])
        self.assertEqual(bc.enumerate_chain_candidates(3, 3, 8),
                         [DegreeSequence([3, 3, 2])])
        self.assertEqual(bc.enumerate_chain_candidates(2, 3, 5),
                         [DegreeSequence([3, 2])])

    def test_order(self):
        candidates = bc.enumerate_chain_candidates(5, 5, 5)
        self.assertEqual([str(c) for c in candidates],
                         ['4,1', '3,2', '3,1,1', '2,2,1', '2,1,1,1'])

    def test_invalid(self):
        with self.assertRaises(InvalidInputError):
            bc.enumerate_chain_candidates(2, 2, 4)
        with self.assertRaises(InvalidInputError):
            bc.enumerate_chain_candidates(2, 2, 1)
        with self.assertRaises(InvalidInputError):
            bc.enumerate_chain_candidates(3, 2, 3)
        with self.assertRaises(InvalidInputError):
            bc.enumerate_chain_candidates(1, 4, 3)

    def test_properties(self):
        for p, q in ((2, 3), (3, 4), (4, 4), (3, 6)):
            for e in range(2, p * q):
                candidates = bc.enumerate_chain_candidates(p, q, e)
                self.assertEqual(len(set(candidates)), len(candidates))
                for degrees in candidates:
                    self.assertEqual(degrees.e, e)
                    self.assertLessEqual(degrees.m, p)
                    self.assertLessEqual(degrees[0], q)
                    self.assertFalse(bc.is_complete_pattern(
                        bc.chain_from_degrees(degrees)))


class TestEnumerateRowSumMatrices(unittest.TestCase):

    def test_examples(self):
        matrices = list(bc.enumerate_row_sum_matrices([2, 1], 2))
        self.assertEqual(len(matrices), 2)
        assert_array_equal(matrices[0], [[1, 1], [1, 0]])
        assert_array_equal(matrices[1], [[1, 1], [0, 1]])
        matrices = list(bc.enumerate_row_sum_matrices([1, 1], 2))
        self.assertEqual(len(matrices), 2)
        assert_array_equal(matrices[0], [[1, 0], [0, 1]])
        assert_array_equal(matrices[1], [[0, 1], [1, 0]])
        self.assertEqual(list(bc.enumerate_row_sum_matrices([2], 3)), [])

    def test_row_sums_and_columns(self):
        degrees = [3, 2, 1]
        count = 0
        for matrix in bc.enumerate_row_sum_matrices(degrees, 4):
            count += 1
            assert_array_equal(matrix.sum(axis=1), degrees)
            self.assertTrue(np.all(matrix.sum(axis=0) > 0))
        self.assertGreater(count, 0)

    def test_count_against_brute_force(self):
        degrees, n = [2, 2, 1], 3
        expected = 0
        for bits in itertools.product([0, 1], repeat=3 * n):
            matrix = np.array(bits).reshape(3, n)
            if list(matrix.sum(axis=1)) == degrees and \
                    np.all(matrix.sum(axis=0) > 0):
                expected += 1
        self.assertEqual(
            len(list(bc.enumerate_row_sum_matrices(degrees, n))), expected)

    def test_too_few_columns(self):
        with self.assertRaises(InvalidInputError):
            bc.enumerate_row_sum_matrices([3, 1], 2)

    def test_budget(self):
        with self.assertRaises(ResourceLimitError):
            list(bc.enumerate_row_sum_matrices([2, 1], 2, budget=1))
        self.assertEqual(
            len(list(bc.enumerate_row_sum_matrices([2, 1], 2, budget=3))), 2)

    @patch.dict(os.environ, {'CHAINSPEC_BUDGET': '1'})
    def test_budget_from_environment(self):
        with self.assertRaises(ResourceLimitError):
            list(bc.enumerate_row_sum_matrices([2, 1], 2))


if __name__ == '__main__':
    unittest.main()
