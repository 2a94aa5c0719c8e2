from __future__ import absolute_import

import doctest
import unittest

import steklov.containers.functions as functions
from steklov.containers.functions import EdgeFunction, VertexFunction


class test_functions(unittest.TestCase):
    def setUp(self):
        self.f = VertexFunction(["a", "b", "c"], [1.0, -2.0, 3.0])

    def test_lookup(self):
        self.assertEqual(-2.0, self.f["b"])
        self.assertTrue("c" in self.f)
        self.assertFalse("z" in self.f)
        self.assertEqual(3, len(self.f))

    def test_from_mapping(self):
        g = VertexFunction(["a", "b", "c"], {"c": 3.0, "a": 1.0, "b": -2.0})
        self.assertEqual(self.f, g)

    def test_values_are_read_only(self):
        self.assertRaises(ValueError, self.f.values.__setitem__, 0, 5.0)

    def test_arithmetic(self):
        self.assertEqual([2.0, -4.0, 6.0], (self.f + self.f).values.tolist())
        self.assertEqual([0.0, 0.0, 0.0], (self.f - self.f).values.tolist())
        self.assertEqual([-1.0, 2.0, -3.0], (-self.f).values.tolist())
        self.assertEqual([0.5, -1.0, 1.5], (0.5 * self.f).values.tolist())

    def test_different_vertex_sets(self):
        g = VertexFunction(["a", "b"], [1.0, 1.0])
        self.assertRaises(ValueError, self.f.__add__, g)

    def test_wrong_length(self):
        self.assertRaises(ValueError, VertexFunction, ["a", "b"], [1.0])

    def test_restrict_and_max_abs(self):
        r = self.f.restrict(["c", "a"])
        self.assertEqual(("c", "a"), r.vertices)
        self.assertEqual(3.0, self.f.max_abs())
        self.assertEqual(2.0, self.f.max_abs(["a", "b"]))
        self.assertEqual(0.0, self.f.max_abs([]))

    def test_edge_function_is_skew(self):
        a = EdgeFunction([("a", "b"), ("b", "c")], [2.0, -1.0])
        self.assertEqual(2.0, a["a", "b"])
        self.assertEqual(-2.0, a["b", "a"])
        self.assertEqual(1.0, a["c", "b"])
        self.assertEqual(0.0, a["a", "c"])
        self.assertEqual(2, len(a))

    def test_edge_function_rejects_both_orientations(self):
        self.assertRaises(ValueError, EdgeFunction, [("a", "b"), ("b", "a")], [1.0, 1.0])


def load_tests(loader, tests, ignore):
    tests.addTests(doctest.DocTestSuite(functions))
    return tests
