from __future__ import absolute_import

import doctest
import io
import json
import os
import shutil
import tempfile
import unittest

from steklov.core.families import make_path
from steklov.core.graphs import build_graph
from steklov.extra import cli
from steklov.extra.graph_json import write_graph, write_json


class test_cli(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.mkdtemp()
        self.p4 = self.path("p4.json")
        write_graph(make_path(4), self.p4)

    def tearDown(self):
        shutil.rmtree(self.tmp)

    def path(self, name):
        return os.path.join(self.tmp, name)

    def run_cli(self, *argv):
        out, err = io.StringIO(), io.StringIO()
        code = cli.run(list(argv), out, err)
        return code, out.getvalue(), err.getvalue()

    def test_family_oracle(self):
        code, out, _ = self.run_cli("family", "regular-star", "--r", "3", "--l", "2", "--oracle", "-")
        self.assertEqual(0, code)
        data = json.loads(out)
        self.assertEqual([0.0, 0.5, 0.5], data["sigma"])
        self.assertEqual({"r": 3, "l": 2}, data["params"])

    def test_family_star_reports_Z(self):
        code, out, _ = self.run_cli("family", "star", "--arms", "1,1,4")
        self.assertEqual(0, code)
        self.assertEqual(["a3.1"], json.loads(out)["Z"])

    def test_family_emit_then_spectrum(self):
        name = self.path("comb.json")
        code, out, _ = self.run_cli("family", "comb", "--r", "2", "--l", "1", "--emit", name)
        self.assertEqual(0, code)
        self.assertEqual("", out)
        code, out, _ = self.run_cli("spectrum", name)
        self.assertEqual(0, code)
        sigma = json.loads(out)["sigma"]
        for a, b in zip([0.0, 0.5, 0.75], sigma):
            self.assertAlmostEqual(a, b, places=10)

    def test_family_missing_parameter(self):
        code, _, err = self.run_cli("family", "comb", "--r", "2")
        self.assertEqual(2, code)
        self.assertTrue(err.startswith("error: UsageError: --l is required"), err)

    def test_spectrum(self):
        report = self.path("report.json")
        code, out, _ = self.run_cli("spectrum", self.p4, "--report", report)
        self.assertEqual(0, code)
        data = json.loads(out)
        self.assertAlmostEqual(0.5, data["sigma"][1], places=10)
        self.assertEqual(["v2"], data["Z"])
        with open(report) as f:
            self.assertEqual(data, json.load(f))

    def test_spectrum_with_zero_set(self):
        code, out, _ = self.run_cli("spectrum", self.p4, "--z", "v2")
        self.assertEqual(0, code)
        data = json.loads(out)
        self.assertEqual(["v2"], data["zero_set"])
        self.assertAlmostEqual(0.5, data["lambda"][0], places=10)

    def test_spectrum_of_trivial_graph(self):
        name = self.path("trivial.json")
        write_graph(build_graph(["a"], [], boundary=["a"]), name)
        code, out, _ = self.run_cli("spectrum", name)
        self.assertEqual(0, code)
        data = json.loads(out)
        self.assertEqual([0.0], data["sigma"])
        self.assertEqual("sigma_i = +infinity for i >= 2", data["note"])

    def test_lambda1(self):
        code, out, _ = self.run_cli("lambda1", self.p4, "--z", "v2")
        self.assertEqual(0, code)
        self.assertAlmostEqual(0.5, json.loads(out)["lambda1"], places=10)

    def test_missing_file(self):
        code, out, err = self.run_cli("spectrum", self.path("nope.json"))
        self.assertEqual(2, code)
        self.assertEqual("", out)
        self.assertTrue(err.startswith("error:"), err)
        self.assertEqual(1, len(err.strip().splitlines()))

    def test_malformed_graph(self):
        name = self.path("bad.json")
        with open(name, "w") as f:
            f.write('{"vertices": [{"id": "a"}], "edges": [{"u": "a", "v": "a"}]}')
        code, _, err = self.run_cli("spectrum", name)
        self.assertEqual(2, code)
        self.assertTrue(err.startswith("error: LoopEdgeError:"), err)

    def test_bad_subcommand(self):
        code, _, err = self.run_cli("eigen", self.p4)
        self.assertEqual(2, code)
        self.assertTrue(err.startswith("error: UsageError:"), err)

    def test_bad_tolerance(self):
        code, _, err = self.run_cli("--tol", "zero=abc", "spectrum", self.p4)
        self.assertEqual(2, code)
        self.assertTrue(err.startswith("error: ParameterError:"), err)

    def test_tolerance_override_is_reported(self):
        code, out, _ = self.run_cli("--tol", "zero=1e-6", "spectrum", self.p4)
        self.assertEqual(0, code)
        self.assertEqual(1e-6, json.loads(out)["tolerances"]["zero"])

    def test_verbose_logs_to_stderr(self):
        code, _, err = self.run_cli("-v", "spectrum", self.p4)
        self.assertEqual(0, code)
        self.assertIn("DEBUG steklov.core.spectral", err)
        code, _, err = self.run_cli("spectrum", self.p4)
        self.assertEqual("", err)

    def test_verify_wedge(self):
        code, out, _ = self.run_cli("verify", "wedge", "--graph", self.p4, "--z", "v2")
        self.assertEqual(0, code)
        self.assertEqual("pass", json.loads(out)["verdict"])

    def test_verify_wedge_needs_z(self):
        code, _, err = self.run_cli("verify", "wedge", "--graph", self.p4)
        self.assertEqual(2, code)
        self.assertIn("--z is required", err)

    def test_verify_wedge_on_boundary(self):
        code, _, err = self.run_cli("verify", "wedge", "--graph", self.p4, "--z", "v0")
        self.assertEqual(2, code)
        self.assertTrue(err.startswith("error: WedgePointError:"), err)

    def _edge(self, weight):
        name = self.path("edge%s.json" % weight)
        write_graph(
            build_graph(["v1", "v2"], [("v1", "v2", weight)], boundary=["v1", "v2"]), name
        )
        return name

    def test_verify_mono(self):
        ambient = self.path("p3.json")
        write_graph(make_path(3), ambient)
        code, out, _ = self.run_cli("verify", "mono", "--ambient", ambient, "--base", self._edge(1.0))
        self.assertEqual(0, code)
        code, out, _ = self.run_cli("verify", "mono", "--ambient", ambient, "--base", self._edge(0.1))
        self.assertEqual(2, code)
        self.assertEqual("hypothesis-not-met", json.loads(out)["verdict"])

    def test_verify_rigidity(self):
        ambient = self.path("p3.json")
        write_graph(make_path(3), ambient)
        for name in ("rigidity", "rigidity-geom", "rigidity-sigma2", "mono-homotopy"):
            code, out, _ = self.run_cli(
                "verify", name, "--ambient", ambient, "--base", self._edge(1.0)
            )
            self.assertEqual(0, code, "%s: %s" % (name, out))

    def test_verify_symmetric_rigidity(self):
        gamma, tooth = self.path("p2.json"), self.path("tooth.json")
        write_graph(make_path(2), gamma)
        write_graph(build_graph(["p0", "p1"], [("p0", "p1")], boundary=["p1"]), tooth)
        code, out, _ = self.run_cli(
            "verify", "rigidity-sym", "--graph", gamma, "--z", "v1", "--r", "2",
            "--tooth", tooth, "--tooth-root", "p0",
        )
        self.assertEqual(0, code, out)
        self.assertTrue(json.loads(out)["data"]["lhs"])

    def test_verify_estimates(self):
        code, out, _ = self.run_cli("verify", "estimate", "--kind", "isodiametric", "--graph", self.p4)
        self.assertEqual(0, code)
        p2, cert = self.path("p2.json"), self.path("cert.json")
        write_graph(make_path(2), p2)
        write_json({"v0": "o.0.0", "v1": "o.0", "v2": "o.0.1"}, cert)
        code, out, _ = self.run_cli(
            "verify", "estimate", "--kind", "tree-ball-subtree", "--graph", p2,
            "--r", "2", "--d", "3", "--certificate", cert,
        )
        self.assertEqual(0, code, out)
        star = self.path("star.json")
        self.run_cli("family", "regular-star", "--r", "3", "--l", "2", "--emit", star)
        code, out, _ = self.run_cli(
            "verify", "estimate", "--kind", "regular-star", "--graph", star, "--r", "3", "--l", "2"
        )
        self.assertEqual(0, code, out)

    def test_verify_estimates_bad_certificate(self):
        p2, cert = self.path("p2.json"), self.path("cert.json")
        write_graph(make_path(2), p2)
        write_json({"v0": "o.0.0"}, cert)
        code, _, err = self.run_cli(
            "verify", "estimate", "--kind", "tree-ball-subtree", "--graph", p2,
            "--r", "2", "--d", "3", "--certificate", cert,
        )
        self.assertEqual(2, code)
        self.assertTrue(err.startswith("error: CertificateError:"), err)

    def test_fuzz(self):
        code, out, _ = self.run_cli("fuzz", "--trials", "4", "--max-vertices", "8", "--seed", "5")
        self.assertEqual(0, code)
        data = json.loads(out)
        self.assertEqual(4, data["data"]["trials"])

    def test_fuzz_planted_bug(self):
        code, out, _ = self.run_cli(
            "fuzz", "--trials", "4", "--max-vertices", "6", "--mix", "tree", "--planted-bug"
        )
        self.assertEqual(1, code)
        self.assertGreater(json.loads(out)["data"]["violations"], 0)

    def test_selftest(self):
        code, out, _ = self.run_cli("selftest")
        self.assertEqual(0, code)
        data = json.loads(out)
        self.assertTrue(data["passed"])
        self.assertEqual(
            sum(len(grid) for grid in cli.SELFTEST_GRID.values()), len(data["cases"])
        )


def load_tests(loader, tests, ignore):
    tests.addTests(doctest.DocTestSuite(cli))
    return tests
