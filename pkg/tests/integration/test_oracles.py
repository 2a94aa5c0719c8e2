from __future__ import absolute_import

import itertools
import unittest

import numpy as np
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from steklov.core import families
from steklov.core.operators import green_residual, stiffness_matrix
from steklov.core.spectral import dtn_operator, steklov_spectrum, zero_set_Z, zero_set_Z1
from steklov.core.tolerances import DEFAULT
from steklov.extra.cli import SELFTEST_GRID, selftest
from tests.graph_strategies import boundary_graphs, vertex_values


def star_arms():
    for r in range(2, 6):
        for arms in itertools.combinations_with_replacement(range(1, 7), r):
            yield list(arms)


class test_oracles(unittest.TestCase):
    def test_selftest_grid(self):
        passed, cases = selftest(DEFAULT)
        bad = [c for c in cases if not c["ok"]]
        self.assertTrue(passed, bad)
        self.assertEqual(sum(len(g) for g in SELFTEST_GRID.values()), len(cases))
        self.assertEqual(455, len(SELFTEST_GRID["star"]))

    def test_every_small_star(self):
        for arms in star_arms():
            computed = steklov_spectrum(families.make_star(arms)).eigenvalues
            np.testing.assert_allclose(
                families.star_spectrum(arms).sigma, computed, atol=1e-8,
                err_msg="arms %s" % arms,
            )

    def test_star_zero_sets(self):
        for arms in star_arms():
            Z, _ = families.star_Z(arms)
            self.assertEqual(Z, zero_set_Z(families.make_star(arms)), "arms %s" % arms)

    def test_path_and_regular_star_Z1(self):
        for l in range(1, 9):
            expected = frozenset(["v%d" % (l // 2)]) if l % 2 == 0 else frozenset()
            self.assertEqual(expected, zero_set_Z1(families.make_path(l)), "l = %d" % l)
        for r in range(2, 6):
            for l in range(1, 6):
                self.assertEqual(
                    frozenset(["o"]), zero_set_Z1(families.make_regular_star(r, l))
                )

    def test_tree_ball_Z1(self):
        for d in (3, 4):
            for r in (1, 2, 3):
                self.assertEqual(
                    frozenset(["o"]),
                    zero_set_Z1(families.make_tree_ball(r, d)),
                    "T(%d, %d)" % (r, d),
                )

    def test_closed_form_eigenfunctions(self):
        cases = [
            (families.make_regular_star(r, l), families.regular_star_eigenfunctions(r, l))
            for r in (2, 3, 5) for l in (1, 4)
        ]
        cases += [
            (families.make_regular_comb(r, l), families.comb_eigenfunctions(r, l))
            for r in (1, 4) for l in (1, 3)
        ]
        cases += [
            (families.make_tree_ball(r, d), families.tree_ball_eigenfunctions(r, d))
            for (r, d) in ((3, 3), (2, 5))
        ]
        for graph, pairs in cases:
            for sigma, f in pairs:
                interior, boundary = families.eigenfunction_residuals(graph, sigma, f)
                self.assertLess(max(interior, boundary), 1e-10, repr(graph))

    @settings(max_examples=500, deadline=None, suppress_health_check=[HealthCheck.too_slow])
    @given(boundary_graphs(max_vertices=30), st.data())
    def test_green_formula_and_symmetry(self, g, data):
        n = len(g)
        f = np.array(data.draw(vertex_values(n)))
        h = np.array(data.draw(vertex_values(n)))
        K = np.abs(stiffness_matrix(g))
        scale = max(1.0, float(np.abs(f).dot(K.dot(np.abs(h)))))
        self.assertLessEqual(abs(green_residual(g, f, h)), 1e-10 * scale)
        S = dtn_operator(g).schur
        size = max(1.0, float(np.max(np.abs(S))))
        self.assertLessEqual(float(np.max(np.abs(S - S.T))), 1e-10 * size)
        self.assertLessEqual(float(np.max(np.abs(S.sum(axis=1)))), 1e-10 * size * n)
        self.assertGreaterEqual(np.linalg.eigvalsh(S)[0], -1e-10 * size * n)
