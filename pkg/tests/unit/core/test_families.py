from __future__ import absolute_import

import doctest
import unittest

import numpy as np

import steklov.core.families as families
from steklov.core.errors import ParameterError
from steklov.core.graphs import is_tree
from steklov.core.spectral import steklov_spectrum


class test_families(unittest.TestCase):
    def test_make_path(self):
        g = families.make_path(3)
        self.assertEqual(("v0", "v1", "v2", "v3"), g.vertices)
        self.assertEqual(set(["v0", "v3"]), set(g.boundary))
        self.assertRaises(ParameterError, families.make_path, 0)

    def test_make_star_names(self):
        g = families.make_star([2, 1])
        self.assertEqual(set(["o", "a1.1", "a2.1", "a2.2"]), set(g.vertices))
        self.assertEqual(set(["a1.1", "a2.2"]), set(g.boundary))
        self.assertTrue(is_tree(g))

    def test_star_spec(self):
        self.assertEqual((1, 2, 3), families.StarSpec([3, 1, 2]).arm_lengths)
        self.assertEqual(families.StarSpec([2, 1]), families.StarSpec([1, 2]))
        self.assertFalse(families.StarSpec([1, 1, 1]) != families.StarSpec([1, 1, 1]))
        self.assertTrue(families.StarSpec([2, 2, 2]).is_regular())
        self.assertFalse(families.StarSpec([1, 2]).is_regular())
        self.assertEqual(6, families.StarSpec([1, 2, 3]).total_length)
        self.assertRaises(ParameterError, families.StarSpec, [3])
        self.assertRaises(ParameterError, families.StarSpec, [1, 0])
        self.assertRaises(ParameterError, families.make_regular_star, 1, 2)

    def test_make_regular_comb(self):
        g = families.make_regular_comb(2, 2)
        self.assertEqual(9, len(g))
        self.assertEqual(set(["t0.2", "t1.2", "t2.2"]), set(g.boundary))
        self.assertIn("b1", g.interior)

    def test_make_tree_ball(self):
        g = families.make_tree_ball(2, 3)
        self.assertEqual(10, len(g))
        self.assertEqual(6, len(g.boundary))
        self.assertIn("o.2.1", g.boundary)
        self.assertRaises(ParameterError, families.make_tree_ball, 2, 2)

    def test_star_char_polynomial(self):
        self.assertEqual([3, -12, 9], families.star_char_polynomial([1, 1, 4]))
        self.assertEqual([2, -3], families.star_char_polynomial([1, 2]))
        self.assertEqual([3, -12, 11], families.star_char_polynomial([3, 2, 1]))

    def test_star_roots(self):
        np.testing.assert_allclose([1.0, 3.0], families.star_roots([1, 1, 4]))
        np.testing.assert_allclose([2.0, 2.0], families.star_roots([2, 2, 2]))
        roots = families.star_roots([1, 2, 3])
        self.assertEqual(2, len(roots))
        for t in roots:
            self.assertAlmostEqual(0.0, 3 * t * t - 12 * t + 11, places=9)

    def test_star_Z(self):
        self.assertEqual((frozenset(["a3.1"]), 1), families.star_Z([1, 1, 4]))
        self.assertEqual((frozenset(["a3.2"]), 2), families.star_Z([1, 1, 7]))
        self.assertEqual((frozenset(), None), families.star_Z([1, 2, 3]))
        self.assertEqual((frozenset(["o"]), 0), families.star_Z([2, 2, 2]))

    def test_star_spectrum_matches_computed(self):
        for arms in ([1, 1, 4], [1, 2, 3], [2, 3], [1, 1, 1, 5], [2, 3, 5, 7]):
            computed = steklov_spectrum(families.make_star(arms)).eigenvalues
            np.testing.assert_allclose(
                families.star_spectrum(arms).sigma, computed, atol=1e-9,
                err_msg="arms %s" % arms,
            )

    def test_path_spectrum(self):
        self.assertEqual([0.0, 0.5], families.path_spectrum(4).sigma)

    def test_regular_star_spectrum(self):
        for r in range(2, 5):
            for l in range(1, 4):
                computed = steklov_spectrum(families.make_regular_star(r, l))
                np.testing.assert_allclose(
                    families.regular_star_spectrum(r, l).sigma,
                    computed.eigenvalues,
                    atol=1e-10,
                )

    def test_regular_comb_spectrum(self):
        for r in range(1, 5):
            for l in range(1, 4):
                computed = steklov_spectrum(families.make_regular_comb(r, l))
                np.testing.assert_allclose(
                    families.regular_comb_spectrum(r, l).sigma,
                    computed.eigenvalues,
                    atol=1e-10,
                )

    def test_comb_sigma_forms_agree(self):
        for r in range(1, 6):
            for l in range(1, 5):
                for i in range(1, r + 2):
                    self.assertAlmostEqual(
                        families.comb_sigma(r, l, i),
                        families.comb_sigma_sine(r, l, i),
                        places=12,
                    )

    def test_tree_ball_spectrum(self):
        for (r, d) in ((1, 3), (2, 3), (3, 3), (2, 4), (1, 5)):
            computed = steklov_spectrum(families.make_tree_ball(r, d))
            np.testing.assert_allclose(
                families.tree_ball_spectrum(r, d).sigma,
                computed.eigenvalues,
                atol=1e-10,
                err_msg="T(%d, %d)" % (r, d),
            )

    def test_tree_ball_multiplicities(self):
        self.assertEqual(1, families.tree_ball_multiplicity(3, 1))
        self.assertEqual(2, families.tree_ball_multiplicity(3, 2))
        self.assertEqual(3, families.tree_ball_multiplicity(3, 3))
        self.assertEqual(6, families.tree_ball_multiplicity(3, 4))
        # the multiplicities add up to the number of leaves d (d-1)^(r-1)
        for d in (3, 4, 5):
            for r in (1, 2, 3):
                total = sum(
                    families.tree_ball_multiplicity(d, k) for k in range(1, r + 2)
                )
                self.assertEqual(d * (d - 1) ** (r - 1), total)

    def _assert_eigenpairs(self, graph, pairs):
        self.assertTrue(pairs)
        for sigma, f in pairs:
            interior, boundary = families.eigenfunction_residuals(graph, sigma, f)
            self.assertLess(interior, 1e-10, "sigma %r" % sigma)
            self.assertLess(boundary, 1e-10, "sigma %r" % sigma)

    def test_regular_star_eigenfunctions(self):
        pairs = families.regular_star_eigenfunctions(4, 3)
        self.assertEqual(3, len(pairs))
        self._assert_eigenpairs(families.make_regular_star(4, 3), pairs)

    def test_comb_eigenfunctions(self):
        pairs = families.comb_eigenfunctions(3, 2)
        self.assertEqual(4, len(pairs))
        self._assert_eigenpairs(families.make_regular_comb(3, 2), pairs)

    def test_tree_ball_eigenfunctions(self):
        for (r, d) in ((2, 3), (3, 3), (2, 4)):
            pairs = families.tree_ball_eigenfunctions(r, d)
            self._assert_eigenpairs(families.make_tree_ball(r, d), pairs)

    def test_eigenfunction_residuals_reject_zero(self):
        g = families.make_path(2)
        zero = dict((v, 0.0) for v in g.vertices)
        self.assertRaises(ParameterError, families.eigenfunction_residuals, g, 1.0, zero)

    def test_elementary_symmetric(self):
        self.assertEqual([1, 3, 2], families.elementary_symmetric([1, 2]))
        self.assertEqual([1], families.elementary_symmetric([]))


def load_tests(loader, tests, ignore):
    tests.addTests(doctest.DocTestSuite(families))
    return tests
