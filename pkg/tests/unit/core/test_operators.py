from __future__ import absolute_import

import doctest
import unittest

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

import steklov.core.operators as operators
from steklov.core.errors import NotBoundaryVertexError
from steklov.core.graphs import build_graph
from tests.graph_strategies import boundary_graphs, vertex_values


class test_operators(unittest.TestCase):
    def setUp(self):
        self.g = build_graph(
            [{"id": "a", "measure": 2.0}, "b", "c"],
            [("a", "b", 3.0), ("b", "c", 1.0)],
            boundary=["a", "c"],
        )

    def test_stiffness_matrix(self):
        expected = np.array([[3.0, -3.0, 0.0], [-3.0, 4.0, -1.0], [0.0, -1.0, 1.0]])
        np.testing.assert_allclose(expected, operators.stiffness_matrix(self.g))

    def test_laplacian(self):
        f = {"a": 1.0, "b": 0.0, "c": 2.0}
        lap = operators.laplacian_apply(self.g, f)
        self.assertAlmostEqual(-1.5, lap["a"])
        self.assertAlmostEqual(5.0, lap["b"])
        self.assertAlmostEqual(-2.0, lap["c"])
        np.testing.assert_allclose(
            lap.values, operators.laplacian_matrix(self.g).dot([1.0, 0.0, 2.0])
        )

    def test_exterior_differential(self):
        df = operators.exterior_differential(self.g, [1.0, 0.0, 2.0])
        self.assertEqual(-1.0, df["a", "b"])
        self.assertEqual(1.0, df["b", "a"])
        self.assertEqual(2.0, df["b", "c"])

    def test_inner_products(self):
        f = [1.0, 2.0, 3.0]
        self.assertEqual(2.0 + 4.0 + 9.0, operators.inner_product(self.g, f, f))
        self.assertEqual(2.0 + 9.0, operators.inner_product(self.g, f, f, ["a", "c"]))
        self.assertEqual(3.0, operators.measure_of(self.g, ["a", "b"]))
        self.assertEqual(4.0, operators.measure_of(self.g, self.g.vertices))
        self.assertAlmostEqual(3.0 + 1.0, operators.dirichlet_energy(self.g, f))

    def test_normal_derivative(self):
        f = {"a": 1.0, "b": 0.0, "c": 2.0}
        self.assertAlmostEqual(1.5, operators.normal_derivative(self.g, f, "a"))
        self.assertAlmostEqual(2.0, operators.normal_derivative(self.g, f, "c"))
        self.assertRaises(NotBoundaryVertexError, operators.normal_derivative, self.g, f, "b")

    def test_as_vector(self):
        self.assertRaises(ValueError, operators.as_vector, self.g, [1.0])
        np.testing.assert_allclose(
            [1.0, 2.0, 3.0], operators.as_vector(self.g, {"c": 3.0, "a": 1.0, "b": 2.0})
        )

    @settings(max_examples=60, deadline=None)
    @given(st.data())
    def test_green_formula(self, data):
        g = data.draw(boundary_graphs())
        f = data.draw(vertex_values(len(g)))
        h = data.draw(vertex_values(len(g)))
        self.assertLess(abs(operators.green_residual(g, f, h)), 1e-9)

    @settings(max_examples=60, deadline=None)
    @given(boundary_graphs())
    def test_laplacian_kills_constants(self, g):
        lap = operators.laplacian_apply(g, np.ones(len(g)))
        self.assertLess(lap.max_abs(), 1e-12)


def load_tests(loader, tests, ignore):
    tests.addTests(doctest.DocTestSuite(operators))
    return tests
