from __future__ import absolute_import

import doctest
import unittest

import steklov.theorems.monotonicity as monotonicity
from steklov.containers.report import FAIL, HYPOTHESIS_NOT_MET, PASS
from steklov.core.families import make_path, make_regular_star, make_star, make_tree_ball
from steklov.core.graphs import build_graph

PATH_EDGES = [("v0", "v1"), ("v1", "v2"), ("v2", "v3")]


def middle_edge(weight=1.0):
    return build_graph(["v1", "v2"], [("v1", "v2", weight)], boundary=["v1", "v2"])


class test_monotonicity(unittest.TestCase):
    def test_path_over_edge(self):
        r = monotonicity.verify_monotonicity(make_path(3), middle_edge())
        self.assertEqual(PASS, r.verdict)
        self.assertAlmostEqual(2.0, r.data["sigma_base"][1], places=10)
        self.assertAlmostEqual(2.0 / 3, r.data["sigma_ambient"][1], places=10)
        self.assertAlmostEqual(4.0 / 3, dict(r.residuals)["sigma_2"], places=8)

    def test_residuals_per_index(self):
        r = monotonicity.verify_monotonicity(make_regular_star(3, 2), make_regular_star(3, 1))
        self.assertEqual(PASS, r.verdict)
        names = [n for (n, _) in r.residuals]
        self.assertEqual(["sigma_1", "sigma_2", "sigma_3"], names)
        self.assertAlmostEqual(0.5, dict(r.residuals)["sigma_2"], places=10)

    def test_isolated_boundary_is_noted(self):
        with self.assertLogs("steklov.theorems.monotonicity", "WARNING"):
            r = monotonicity.verify_monotonicity(make_path(3), middle_edge())
        self.assertTrue(any("base graph" in n for n in r.notes), r.notes)

    def test_not_a_subgraph(self):
        r = monotonicity.verify_monotonicity(make_star([1, 1]), make_path(1))
        self.assertEqual(HYPOTHESIS_NOT_MET, r.verdict)
        self.assertFalse(r.hypotheses["comb"])
        self.assertEqual([], r.residuals)

    def test_not_a_comb(self):
        cycle = build_graph(
            ["a", "b", "c", "d"],
            [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")],
            boundary=["c"],
        )
        base = build_graph(["a", "b"], [("a", "b")], boundary=["a", "b"])
        r = monotonicity.verify_monotonicity(cycle, base)
        self.assertEqual(HYPOTHESIS_NOT_MET, r.verdict)
        self.assertFalse(r.hypotheses["comb"])
        self.assertTrue(r.notes)

    def test_tooth_measure_too_small(self):
        ambient = build_graph(["v0", "v1", "v2", "v3"], PATH_EDGES, boundary=["v0"])
        r = monotonicity.verify_monotonicity(ambient, middle_edge())
        self.assertEqual(HYPOTHESIS_NOT_MET, r.verdict)
        self.assertTrue(r.hypotheses["comb"])
        self.assertFalse(r.hypotheses["measure"])

    def test_weights_must_be_inherited(self):
        r = monotonicity.verify_monotonicity(make_path(3), middle_edge(0.1))
        self.assertEqual(HYPOTHESIS_NOT_MET, r.verdict)
        self.assertFalse(r.hypotheses["inherits-weights"])

    def test_smaller_base_weights_break_monotonicity(self):
        r = monotonicity.verify_monotonicity(
            make_path(3), middle_edge(0.1), weights_from_ambient=False
        )
        self.assertEqual(FAIL, r.verdict)
        self.assertNotIn("inherits-weights", r.hypotheses)
        self.assertEqual(["sigma_2"], r.failures)
        self.assertEqual(2, r.witness["sigma_2"]["index"])
        self.assertLess(r.min_residual(), 0.0)

    def test_tree_ball_over_star(self):
        ball = make_tree_ball(2, 3)
        base = ball.subgraph(["o", "o.0", "o.1", "o.2"], ["o.0", "o.1", "o.2"])
        r = monotonicity.verify_monotonicity(ball, base)
        self.assertEqual(PASS, r.verdict)
        self.assertAlmostEqual(1.0 / 3, r.data["sigma_ambient"][1], places=10)

    def test_homotopy_variant(self):
        r = monotonicity.verify_monotonicity_homotopy(
            make_regular_star(3, 2), make_regular_star(3, 1)
        )
        self.assertEqual(PASS, r.verdict)
        self.assertTrue(r.hypotheses["homotopy-faithful"])
        self.assertEqual("monotonicity-homotopy", r.theorem)

    def test_homotopy_variant_resets_weights(self):
        weighted = build_graph(
            [{"id": "v0", "measure": 3.0}, "v1", "v2", "v3"],
            [("v0", "v1", 5.0), ("v1", "v2", 2.0), ("v2", "v3", 0.5)],
            boundary=["v1"],
        )
        base = build_graph(["v1", "v2"], [("v1", "v2")])
        r = monotonicity.verify_monotonicity_homotopy(weighted, base)
        self.assertEqual(PASS, r.verdict)


def load_tests(loader, tests, ignore):
    tests.addTests(doctest.DocTestSuite(monotonicity))
    return tests
