from __future__ import absolute_import

import doctest
import unittest

import networkx as nx
import numpy as np

import steklov.theorems.fuzz as fuzz
from steklov.containers.report import FAIL, PASS
from steklov.core.combs import comb_decompose
from steklov.core.errors import ParameterError
from steklov.core.graphs import is_tree
from steklov.extra.graph_json import dumps, graph_from_dict


class test_fuzz(unittest.TestCase):
    def test_config_defaults(self):
        c = fuzz.FuzzConfig()
        self.assertEqual(200, c.trials)
        self.assertEqual(7, c.seed)
        self.assertEqual("both", c.mix)
        self.assertFalse(c.planted_bug)
        self.assertIsNotNone(c.tolerances)

    def test_config_validation(self):
        self.assertRaises(ParameterError, fuzz.FuzzConfig, max_vertices=2)
        self.assertRaises(ParameterError, fuzz.FuzzConfig, mix="cycles")
        self.assertRaises(ParameterError, fuzz.FuzzConfig, trials=-1)
        self.assertRaises(ParameterError, fuzz.FuzzConfig, workers=0)

    def test_trial_kind(self):
        both = fuzz.FuzzConfig()
        self.assertEqual(["tree", "comb", "tree"], [fuzz.trial_kind(both, i) for i in range(3)])
        self.assertEqual("comb", fuzz.trial_kind(fuzz.FuzzConfig(mix="comb"), 0))

    def test_random_tree(self):
        rng = np.random.default_rng(5)
        for n in (2, 3, 10):
            t = fuzz.random_tree(rng, n)
            self.assertEqual(n, t.number_of_nodes())
            self.assertTrue(nx.is_tree(t))

    def test_random_subtree_is_connected(self):
        rng = np.random.default_rng(11)
        tree = fuzz.random_tree(rng, 12)
        for _ in range(10):
            sub = fuzz.random_subtree(rng, tree)
            self.assertGreaterEqual(len(sub), 2)
            self.assertTrue(nx.is_connected(tree.subgraph(sub)))

    def test_tree_pair_is_a_comb(self):
        config = fuzz.FuzzConfig(max_vertices=15, weighted=True)
        rng = np.random.default_rng(3)
        for _ in range(5):
            ambient, base = fuzz.tree_pair(rng, config)
            self.assertTrue(is_tree(ambient))
            decomp = comb_decompose(ambient, base)
            for x in base.boundary:
                self.assertGreaterEqual(decomp.tooth_measure(x), base.m(x))

    def test_comb_pair_is_a_comb(self):
        config = fuzz.FuzzConfig(max_vertices=20, weighted=True)
        rng = np.random.default_rng(4)
        for _ in range(5):
            ambient, base = fuzz.comb_pair(rng, config)
            decomp = comb_decompose(ambient, base)
            self.assertEqual(len(base), len(decomp))
            self.assertTrue(base.boundary)
            for x in base.boundary:
                self.assertGreaterEqual(decomp.tooth_measure(x), base.m(x))

    def test_plant_bug(self):
        rng = np.random.default_rng(0)
        _, base = fuzz.comb_pair(rng, fuzz.FuzzConfig(max_vertices=9))
        bugged = fuzz.plant_bug(base)
        for (u, v, w) in base.weighted_edges():
            self.assertAlmostEqual(w * fuzz.PLANTED_BUG_SCALE, bugged.w(u, v))
        self.assertEqual(base.boundary, bugged.boundary)

    def test_small_run_passes(self):
        r = fuzz.fuzz(fuzz.FuzzConfig(trials=6, max_vertices=12, seed=3))
        self.assertEqual(PASS, r.verdict, r.witness)
        self.assertEqual(0, r.data["violations"])
        self.assertEqual(6, len(r.data["trial_summaries"]))
        names = set(n for (n, _) in r.residuals)
        self.assertIn("monotonicity", names)
        self.assertIn("wedge-identity", names)

    def test_run_is_deterministic(self):
        config = fuzz.FuzzConfig(trials=4, max_vertices=10, seed=21, weighted=True)
        first = dumps(fuzz.fuzz(config).as_dict())
        second = dumps(fuzz.fuzz(config).as_dict())
        self.assertEqual(first, second)

    def test_workers_do_not_change_results(self):
        config = fuzz.FuzzConfig(trials=4, max_vertices=10, seed=2)
        serial = fuzz.fuzz(config).data["trial_summaries"]
        parallel = fuzz.fuzz(config._replace(workers=2)).data["trial_summaries"]
        self.assertEqual(dumps(serial), dumps(parallel))

    def test_planted_bug_is_caught(self):
        config = fuzz.FuzzConfig(trials=6, max_vertices=6, seed=1, mix="tree", planted_bug=True)
        r = fuzz.fuzz(config)
        self.assertEqual(FAIL, r.verdict)
        self.assertGreater(r.data["violations"], 0)
        reason = r.failures[0]
        self.assertTrue(reason.endswith(":monotonicity"), reason)
        witness = r.witness[reason]
        ambient = graph_from_dict(witness["ambient"])
        base = graph_from_dict(witness["base"])
        self.assertTrue(set(base.vertices) <= set(ambient.vertices))

    def test_run_trial_summary(self):
        t = fuzz.run_trial(fuzz.FuzzConfig(mix="comb", max_vertices=12), 0)
        self.assertEqual(0, t["trial"])
        self.assertEqual("comb", t["kind"])
        self.assertIn("monotonicity", t["checks"])
        self.assertIn("rigidity-geometric", t["checks"])
        self.assertEqual([], t["failures"])
        self.assertNotIn("witness", t)


def load_tests(loader, tests, ignore):
    tests.addTests(doctest.DocTestSuite(fuzz))
    return tests
