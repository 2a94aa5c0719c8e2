from __future__ import absolute_import

import doctest
import math
import unittest

import numpy as np

import steklov.containers.spectrum as spectrum
from steklov.containers.spectrum import (
    ClosedFormSpectrum,
    DirichletSteklovSpectrum,
    Eigenvalue,
    SteklovSpectrum,
    group_indices,
)
from steklov.core.families import make_path


class test_spectrum(unittest.TestCase):
    def setUp(self):
        self.g = make_path(2)
        vectors = np.array([[1.0, 1.0], [1.0, -1.0]]) / math.sqrt(2.0)
        extensions = np.array([[1.0, 1.0], [1.0, 0.0], [1.0, -1.0]]) / math.sqrt(2.0)
        self.s = SteklovSpectrum(self.g, [0.0, 1.0], vectors, extensions)

    def test_sigma(self):
        self.assertEqual(Eigenvalue(2, 1.0), self.s.sigma(2))
        self.assertFalse(self.s.sigma(1).is_infinite)
        self.assertTrue(self.s.sigma(3).is_infinite)
        self.assertEqual(math.inf, float(self.s.sigma(3)))
        self.assertRaises(IndexError, self.s.sigma, 0)

    def test_iteration(self):
        self.assertEqual([0.0, 1.0], list(self.s))
        self.assertEqual(2, len(self.s))

    def test_eigenfunction(self):
        f = self.s.eigenfunction(2)
        self.assertAlmostEqual(0.0, f["v1"])
        self.assertAlmostEqual(1 / math.sqrt(2.0), f["v0"])
        self.assertEqual(2, len(self.s.eigenbasis()))

    def test_arrays_are_read_only(self):
        self.assertRaises(ValueError, self.s.eigenvalues.__setitem__, 0, 3.0)

    def test_eigenspace(self):
        self.assertEqual([[1, 1], [2, 2]], self.s.multiplicity_groups())
        self.assertEqual([2], self.s.eigenspace(2))
        self.assertRaises(IndexError, self.s.eigenspace, 5)

    def test_group_indices(self):
        self.assertEqual([], group_indices([]))
        self.assertEqual([[1, 3]], group_indices([1.0, 1.0, 1.0 + 1e-9]))
        self.assertEqual([[1, 1], [2, 2]], group_indices([1.0, 1.001]))

    def test_dirichlet_spectrum(self):
        d = DirichletSteklovSpectrum(
            self.g, ["v1"], [1.0, 1.0], np.eye(2), np.array([[1.0, 0.0], [0.0, 0.0], [0.0, 1.0]])
        )
        self.assertEqual(frozenset(["v1"]), d.zero_set)
        self.assertEqual(1.0, d.lambda1)
        self.assertEqual(1.0, float(d.lambda_(2)))
        empty = DirichletSteklovSpectrum(
            self.g, [], np.zeros(0), np.zeros((0, 0)), np.zeros((3, 0))
        )
        self.assertEqual(math.inf, empty.lambda1)

    def test_closed_form(self):
        c = ClosedFormSpectrum.from_list("comb", {"r": 2, "l": 1}, [0.75, 0.0, 0.5])
        self.assertEqual([0.0, 0.5, 0.75], c.values)
        self.assertEqual([1, 1, 1], c.multiplicities)
        self.assertEqual(
            {"family": "comb", "params": {"r": 2, "l": 1}, "sigma": [0.0, 0.5, 0.75]},
            c.as_dict(),
        )
        self.assertRaises(ValueError, ClosedFormSpectrum, "x", {}, [0.0], [1, 2])


def load_tests(loader, tests, ignore):
    tests.addTests(doctest.DocTestSuite(spectrum))
    return tests
