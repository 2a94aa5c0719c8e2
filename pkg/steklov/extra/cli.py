# -*- coding: utf-8 -*-

#    steklov - Steklov spectra of graphs with boundary, command line module.
#    Copyright (C) the steklov developers
#
#    This program is free software: you can redistribute it and/or modify
#    it under the terms of the GNU General Public License as published by
#    the Free Software Foundation, either version 3 of the License, or
#    (at your option) any later version.
#
#    This program is distributed in the hope that it will be useful,
#    but WITHOUT ANY WARRANTY; without even the implied warranty of
#    MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#    GNU General Public License for more details.
#
#    You should have received a copy of the GNU General Public License
#    along with this program.  If not, see <http://www.gnu.org/licenses/>.

"""The steklov command line tool.

    steklov [--tol NAME=VALUE ...] [--verbose] COMMAND ...

Commands: spectrum, lambda1, family, verify, fuzz and selftest. Reports
are written as JSON to standard output (and to --report when given).
Exit codes: 0 when everything passes, 1 when a verification fails and 2
on malformed input or unmet hypotheses. Errors print a single line
'error: <kind>: <reason>' to standard error.
"""
from __future__ import absolute_import

import argparse
import itertools
import logging
import sys
from collections import OrderedDict

import six

from steklov.containers.report import FAIL, PASS
from steklov.core import families
from steklov.core.errors import Error
from steklov.core.spectral import lambda1, spectrum_report, steklov_spectrum, zero_set_Z
from steklov.core.tolerances import (
    COMPARISON_ATOL,
    GROUPING_RTOL,
    ZERO_ATOL,
    Tolerances,
)
from steklov.extra.graph_json import dumps, read_graph, read_json, write_graph, write_json
from steklov.theorems.estimates import KINDS, verify_estimates
from steklov.theorems.fuzz import MIXES, FuzzConfig, fuzz
from steklov.theorems.monotonicity import verify_monotonicity, verify_monotonicity_homotopy
from steklov.theorems.rigidity import (
    verify_rigidity_full,
    verify_rigidity_geometric,
    verify_rigidity_sigma2,
    verify_symmetric_rigidity,
    verify_wedge_identity,
)

log = logging.getLogger(__name__)

FAMILIES = ("path", "star", "regular-star", "comb", "tree-ball")

VERIFIERS = (
    "mono",
    "mono-homotopy",
    "rigidity",
    "rigidity-geom",
    "rigidity-sigma2",
    "rigidity-sym",
    "wedge",
    "estimate",
)

# Family parameters checked by the selftest.
SELFTEST_GRID = OrderedDict(
    [
        ("regular-star", [{"r": r, "l": l} for r in range(2, 6) for l in range(1, 6)]),
        ("comb", [{"r": r, "l": l} for r in range(1, 7) for l in range(1, 6)]),
        ("tree-ball", [{"r": r, "d": d} for d in (3, 4) for r in range(1, 4)]),
        (
            "star",
            [
                {"arms": list(arms)}
                for r in range(2, 6)
                for arms in itertools.combinations_with_replacement(range(1, 7), r)
            ],
        ),
    ]
)


class UsageError(Error):
    pass


class Parser(argparse.ArgumentParser):

    """An ArgumentParser reporting errors on a single line."""

    def error(self, message):
        raise UsageError(message)


def _ids(text):
    if text is None:
        return []
    return [v.strip() for v in text.split(",") if v.strip()]


def _ints(text):
    try:
        return [int(v) for v in _ids(text)]
    except ValueError:
        raise UsageError("Expecting comma separated integers, got '%s'" % text)


def _require(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError("--%s is required" % name.replace("_", "-"))


def family_params(name, args):
    """Collect the parameters of family name from the parsed flags."""
    if name == "path":
        _require(args, "l")
        return {"l": args.l}
    if name == "star":
        _require(args, "arms")
        return {"arms": _ints(args.arms)}
    if name == "tree-ball":
        _require(args, "r", "d")
        return {"r": args.r, "d": args.d}
    _require(args, "r", "l")
    return {"r": args.r, "l": args.l}


def build_family(name, params, tolerances=None):
    """Return (graph, ClosedFormSpectrum) for a family.

    >>> graph, oracle = build_family('path', {'l': 4})
    >>> len(graph), oracle.sigma
    (5, [0.0, 0.5])
    """
    if name == "path":
        return families.make_path(params["l"]), families.path_spectrum(params["l"])
    if name == "star":
        arms = params["arms"]
        return families.make_star(arms), families.star_spectrum(arms, tolerances)
    if name == "regular-star":
        r, l = params["r"], params["l"]
        return families.make_regular_star(r, l), families.regular_star_spectrum(r, l)
    if name == "comb":
        r, l = params["r"], params["l"]
        return (
            families.make_regular_comb(r, l),
            families.regular_comb_spectrum(r, l, tolerances),
        )
    r, d = params["r"], params["d"]
    return families.make_tree_ball(r, d), families.tree_ball_spectrum(r, d)


def oracle_dict(name, oracle):
    out = OrderedDict(
        [("family", oracle.family), ("params", oracle.params), ("sigma", oracle.sigma)]
    )
    if name == "star":
        Z, d = families.star_Z(oracle.params["arms"])
        out["Z"] = Z
        if d == 0:
            out["note"] = "d = 0: Z is the center"
    return out


def _emit(args, obj, out):
    text = dumps(obj, indent=2)
    out.write(text + "\n")
    if getattr(args, "report", None):
        write_json(obj, args.report)


def _verdict_code(report):
    if report.verdict == PASS:
        return 0
    if report.verdict == FAIL:
        return 1
    return 2


def cmd_spectrum(args, out):
    graph = read_graph(args.graph)
    _emit(args, spectrum_report(graph, _ids(args.z), args.tolerances), out)
    return 0


def cmd_lambda1(args, out):
    graph = read_graph(args.graph)
    zero_set = _ids(args.z)
    value = lambda1(graph, zero_set=zero_set, tolerances=args.tolerances)
    _emit(args, OrderedDict([("zero_set", zero_set), ("lambda1", value)]), out)
    return 0


def cmd_family(args, out):
    params = family_params(args.name, args)
    graph, oracle = build_family(args.name, params, args.tolerances)
    if args.emit:
        write_graph(graph, args.emit)
    if args.oracle or not args.emit:
        obj = oracle_dict(args.name, oracle)
        if args.oracle and args.oracle != "-":
            write_json(obj, args.oracle)
        else:
            out.write(dumps(obj) + "\n")
    return 0


def _read_certificate(filename):
    if filename is None:
        return None
    data = read_json(filename)
    if not isinstance(data, dict):
        raise UsageError("A certificate must be a JSON object")
    return data


def cmd_verify(args, out):
    tol = args.tolerances
    name = args.name
    if name in ("mono", "mono-homotopy", "rigidity", "rigidity-geom", "rigidity-sigma2"):
        _require(args, "ambient", "base")
        ambient, base = read_graph(args.ambient), read_graph(args.base)
        verifier = {
            "mono": verify_monotonicity,
            "mono-homotopy": verify_monotonicity_homotopy,
            "rigidity": verify_rigidity_full,
            "rigidity-geom": verify_rigidity_geometric,
            "rigidity-sigma2": verify_rigidity_sigma2,
        }[name]
        report = verifier(ambient, base, tol)
    elif name == "wedge":
        _require(args, "graph", "z")
        report = verify_wedge_identity(read_graph(args.graph), args.z, tol)
    elif name == "rigidity-sym":
        _require(args, "graph", "z", "r", "tooth", "tooth_root")
        report = verify_symmetric_rigidity(
            read_graph(args.graph),
            args.z,
            args.r,
            read_graph(args.tooth),
            args.tooth_root,
            tol,
        )
    else:
        _require(args, "kind")
        graph = args.graph or args.ambient
        if graph is None:
            raise UsageError("--graph is required")
        if args.kind == "isodiametric":
            params = {}
        elif args.kind.startswith("tree-ball"):
            params = family_params("tree-ball", args)
        else:
            params = family_params(args.kind, args)
        report = verify_estimates(
            args.kind,
            params,
            read_graph(graph),
            _read_certificate(args.certificate),
            tol,
        )
    _emit(args, report.as_dict(), out)
    return _verdict_code(report)


def cmd_fuzz(args, out):
    config = FuzzConfig(
        trials=args.trials,
        max_vertices=args.max_vertices,
        seed=args.seed,
        mix=args.mix,
        weighted=args.weighted,
        tolerances=args.tolerances,
        workers=args.workers,
        planted_bug=args.planted_bug,
    )
    report = fuzz(config)
    _emit(args, report.as_dict(), out)
    return _verdict_code(report)


def selftest(tolerances):
    """Compare every closed-form spectrum of SELFTEST_GRID with the
    eigensolver; return (passed, cases)."""
    cases = []
    passed = True
    for name, grid in SELFTEST_GRID.items():
        for params in grid:
            graph, oracle = build_family(name, params, tolerances)
            computed = steklov_spectrum(graph, tolerances).eigenvalues.tolist()
            expected = oracle.sigma
            error = max(
                abs(a - b) / max(1.0, abs(b)) for (a, b) in zip(computed, expected)
            )
            ok = len(computed) == len(expected) and error <= tolerances.comparison
            case = OrderedDict([("family", name), ("params", params), ("max_error", error)])
            if name == "star":
                Z, _ = families.star_Z(params["arms"])
                case["Z_ok"] = Z == zero_set_Z(graph, tolerances)
                ok = ok and case["Z_ok"]
            case["ok"] = ok
            passed = passed and ok
            cases.append(case)
            if not ok:
                log.warning("selftest: %s %r differs by %r", name, params, error)
    return passed, cases


def cmd_selftest(args, out):
    passed, cases = selftest(args.tolerances)
    obj = OrderedDict([("passed", passed), ("cases", cases)])
    _emit(args, obj, out)
    return 0 if passed else 1


def make_parser():
    tol_help = "override a tolerance; defaults: comparison=%g, grouping=%g, zero=%g" % (
        COMPARISON_ATOL,
        GROUPING_RTOL,
        ZERO_ATOL,
    )
    p = Parser(prog="steklov", description="Steklov spectra of graphs with boundary")
    p.add_argument("--tol", action="append", default=[], metavar="NAME=VALUE", help=tol_help)
    p.add_argument("-v", "--verbose", action="store_true", help="log debug messages")
    sub = p.add_subparsers(dest="cmd", parser_class=Parser)
    sub.required = True

    s = sub.add_parser("spectrum", help="Steklov or Dirichlet-Steklov spectrum")
    s.add_argument("graph", help="graph JSON file ('-' for stdin)")
    s.add_argument("--z", help="comma separated zero set")
    s.add_argument("--report", help="also write the report to this file")
    s.set_defaults(func=cmd_spectrum)

    s = sub.add_parser("lambda1", help="first Dirichlet-Steklov eigenvalue")
    s.add_argument("graph", help="graph JSON file ('-' for stdin)")
    s.add_argument("--z", required=True, help="comma separated zero set")
    s.add_argument("--report", help="also write the report to this file")
    s.set_defaults(func=cmd_lambda1)

    s = sub.add_parser("family", help="build a graph family and its closed-form spectrum")
    s.add_argument("name", choices=FAMILIES)
    _family_flags(s)
    s.add_argument("--emit", help="write the graph JSON to this file")
    s.add_argument("--oracle", help="write the closed-form spectrum to this file ('-' for stdout)")
    s.set_defaults(func=cmd_family)

    s = sub.add_parser("verify", help="run a theorem verifier")
    s.add_argument("name", choices=VERIFIERS)
    s.add_argument("--ambient", help="ambient graph JSON")
    s.add_argument("--base", help="base graph JSON")
    s.add_argument("--graph", help="graph JSON (wedge, rigidity-sym, estimate)")
    s.add_argument("--z", help="wedge point")
    s.add_argument("--tooth", help="tooth graph JSON (rigidity-sym)")
    s.add_argument("--tooth-root", help="tooth vertex glued at z (rigidity-sym)")
    s.add_argument("--kind", choices=KINDS, help="estimate kind")
    s.add_argument("--certificate", help="JSON object mapping vertex ids (estimate)")
    _family_flags(s)
    s.add_argument("--report", help="also write the report to this file")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("fuzz", help="randomised counterexample search")
    s.add_argument("--trials", type=int, default=200)
    s.add_argument("--max-vertices", type=int, default=40)
    s.add_argument("--seed", type=int, default=7)
    s.add_argument("--mix", choices=MIXES, default="both")
    s.add_argument("--weighted", action="store_true")
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--planted-bug", action="store_true", help="shrink base weights (self-test)")
    s.add_argument("--report", help="also write the report to this file")
    s.set_defaults(func=cmd_fuzz)

    s = sub.add_parser("selftest", help="closed-form spectra against the eigensolver")
    s.add_argument("--report", help="also write the report to this file")
    s.set_defaults(func=cmd_selftest)
    return p


def _family_flags(s):
    s.add_argument("--r", type=int, help="number of arms, base length or radius")
    s.add_argument("--l", type=int, help="arm or tooth length")
    s.add_argument("--d", type=int, help="tree degree")
    s.add_argument("--arms", help="comma separated arm lengths (star)")


def run(argv=None, stdout=None, stderr=None):
    """Run the tool on argv and return the exit code."""
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    handler = logging.StreamHandler(err)
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    package_log = logging.getLogger("steklov")
    package_log.addHandler(handler)
    previous = package_log.level
    try:
        try:
            args = make_parser().parse_args(argv)
        except SystemExit as exc:
            return exc.code or 0
        package_log.setLevel(logging.DEBUG if args.verbose else logging.WARNING)
        args.tolerances = Tolerances.from_strings(args.tol)
        return args.func(args, out)
    except (Error, ValueError, IOError, KeyError) as exc:
        message = six.text_type(exc).replace("\n", " ")
        err.write("error: %s: %s\n" % (type(exc).__name__, message))
        return 2
    finally:
        package_log.removeHandler(handler)
        package_log.setLevel(previous)


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
