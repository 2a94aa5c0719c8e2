# -*- coding: utf-8 -*-

#    steklov - Steklov spectra of graphs with boundary, fuzz module.
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

"""Randomised search for counterexamples.

Each trial draws either a random labelled tree together with a random
subtree, or a random connected base graph together with a random comb
over it, and runs the verifiers on the pair. Trial i draws from a
generator seeded with (seed, i), so a trial does not depend on the other
trials or on how they are scheduled, and the aggregate report is a pure
function of the configuration.

Any failing trial carries the graphs as JSON in its witness, so it can be
replayed with the command line tool.
"""
from __future__ import absolute_import

import logging
from collections import OrderedDict, namedtuple
from concurrent.futures import ProcessPoolExecutor

import networkx as nx
import numpy as np

from steklov.containers.graph import WeightedBoundaryGraph
from steklov.containers.report import FAIL, HYPOTHESIS_NOT_MET, VerdictReport
from steklov.core.errors import ParameterError
from steklov.core.graphs import combinatorial_boundary
from steklov.core.tolerances import resolve
from steklov.extra.graph_json import graph_to_dict
from steklov.theorems.estimates import verify_estimates
from steklov.theorems.monotonicity import verify_monotonicity
from steklov.theorems.rigidity import verify_rigidity_geometric, verify_wedge_identity

log = logging.getLogger(__name__)

MIXES = ("both", "tree", "comb")

# Measures and weights of weighted trials are drawn from this range.
WEIGHT_RANGE = (0.5, 2.0)

# Factor applied to the base weights in planted bug mode.
PLANTED_BUG_SCALE = 0.1

_SUBTREE_ATTEMPTS = 20

_FuzzConfig = namedtuple(
    "FuzzConfig",
    [
        "trials",
        "max_vertices",
        "seed",
        "mix",
        "weighted",
        "tolerances",
        "workers",
        "planted_bug",
    ],
)


class FuzzConfig(_FuzzConfig):

    """Settings of a fuzz run.

    mix is 'tree', 'comb' or 'both' (trials alternate, even trials draw
    trees). planted_bug shrinks the base weights before comparing spectra,
    so monotonicity must be reported as violated.

    >>> FuzzConfig(trials=10).max_vertices
    40
    """

    __slots__ = ()

    def __new__(
        cls,
        trials=200,
        max_vertices=40,
        seed=7,
        mix="both",
        weighted=False,
        tolerances=None,
        workers=1,
        planted_bug=False,
    ):
        if trials < 0:
            raise ParameterError("The number of trials can't be negative")
        if max_vertices < 3:
            raise ParameterError("max_vertices must be at least 3")
        if mix not in MIXES:
            raise ParameterError("Unknown trial mix '%s'" % mix)
        if workers < 1:
            raise ParameterError("workers must be at least 1")
        return _FuzzConfig.__new__(
            cls,
            int(trials),
            int(max_vertices),
            int(seed),
            mix,
            bool(weighted),
            resolve(tolerances),
            int(workers),
            bool(planted_bug),
        )


def trial_kind(config, i):
    if config.mix == "both":
        return "tree" if i % 2 == 0 else "comb"
    return config.mix


def _draw(rng, weighted):
    if not weighted:
        return 1.0
    return float(rng.uniform(*WEIGHT_RANGE))


def random_tree(rng, n):
    """Return a uniformly random labelled tree on n >= 2 vertices as a
    networkx graph on 0, ..., n-1, decoded from a random Pruefer
    sequence."""
    if n == 2:
        return nx.path_graph(2)
    sequence = rng.integers(0, n, size=n - 2).tolist()
    return nx.from_prufer_sequence(sequence)


def random_subtree(rng, tree):
    """Return the vertex set of a random subtree with at least 2 vertices.

    A random root keeps the component it lies in after every edge has
    been kept with probability one half. This is not uniform over
    subtrees.
    """
    nodes = sorted(tree.nodes())
    root = nodes[int(rng.integers(0, len(nodes)))]
    for _ in range(_SUBTREE_ATTEMPTS):
        kept = nx.Graph()
        kept.add_node(root)
        for (u, v) in sorted(tree.edges()):
            if rng.random() < 0.5:
                kept.add_edge(u, v)
        component = nx.node_connected_component(kept, root)
        if len(component) >= 2:
            return component
    return set([root, sorted(tree.neighbors(root))[0]])


def tree_pair(rng, config):
    """Draw (ambient tree, subtree) with boundary {deg <= 1} on both.

    In weighted trials a base boundary vertex whose tooth holds too little
    boundary measure is itself added to the ambient boundary.
    """
    n = int(rng.integers(3, config.max_vertices + 1))
    tree = random_tree(rng, n)
    name = "n%d".__mod__
    vertices = [name(k) for k in range(n)]
    measure = dict((v, _draw(rng, config.weighted)) for v in vertices)
    edges = [
        (name(u), name(v), _draw(rng, config.weighted)) for (u, v) in sorted(tree.edges())
    ]
    shape = WeightedBoundaryGraph(vertices, edges, measure, [])
    boundary = set(combinatorial_boundary(shape))
    keep = [name(k) for k in sorted(random_subtree(rng, tree))]
    base_boundary = combinatorial_boundary(shape.subgraph(keep))

    if config.weighted:
        pruned = tree.copy()
        pruned.remove_edges_from(
            (u, v) for (u, v) in tree.edges() if name(u) in keep and name(v) in keep
        )
        for x in base_boundary:
            tooth = nx.node_connected_component(pruned, int(x[1:]))
            mass = sum(measure[name(k)] for k in tooth if name(k) in boundary)
            if mass < measure[x]:
                boundary.add(x)

    ambient = shape.with_boundary(boundary)
    return ambient, ambient.subgraph(keep, boundary=base_boundary)


def _random_base(rng, config, n):
    name = "g%d".__mod__
    tree = random_tree(rng, n)
    edges = set(tuple(sorted(e)) for e in tree.edges())
    for _ in range(int(rng.integers(0, n))):
        u, v = sorted(rng.choice(n, size=2, replace=False).tolist())
        edges.add((u, v))
    vertices = [name(k) for k in range(n)]
    boundary = [v for v in vertices if rng.random() < 0.5]
    if not boundary:
        boundary = [vertices[int(rng.integers(0, n))]]
    edges = [(name(u), name(v), _draw(rng, config.weighted)) for (u, v) in sorted(edges)]
    measure = dict((v, _draw(rng, config.weighted)) for v in vertices)
    return vertices, edges, measure, boundary


def comb_pair(rng, config):
    """Draw (ambient comb, base graph) satisfying every hypothesis of the
    monotonicity theorem by construction.

    Teeth are random recursive trees hanging at the base vertices; their
    leaves join the boundary with probability one half, and a base
    boundary vertex joins the ambient boundary when its tooth holds less
    boundary measure than the vertex itself.
    """
    n = int(rng.integers(2, max(2, config.max_vertices // 3) + 1))
    vertices, edges, measure, base_boundary = _random_base(rng, config, n)
    budget = max(0, config.max_vertices - n) // n
    boundary = set()
    for x in list(vertices[:n]):
        size = int(rng.integers(0, budget + 1))
        tooth = [x] + ["t%s.%d" % (x, k) for k in range(1, size + 1)]
        children = dict((v, 0) for v in tooth)
        for k in range(1, size + 1):
            parent = tooth[int(rng.integers(0, k))]
            children[parent] += 1
            edges.append((parent, tooth[k], _draw(rng, config.weighted)))
            measure[tooth[k]] = _draw(rng, config.weighted)
            vertices.append(tooth[k])
        chosen = [v for v in tooth[1:] if children[v] == 0 and rng.random() < 0.5]
        boundary.update(chosen)
        if x in base_boundary and sum(measure[v] for v in chosen) < measure[x]:
            boundary.add(x)
    ambient = WeightedBoundaryGraph(vertices, edges, measure, boundary)
    base_ids = ["g%d" % k for k in range(n)]
    return ambient, ambient.subgraph(base_ids, boundary=base_boundary)


def plant_bug(base):
    """Return base with every weight scaled by PLANTED_BUG_SCALE."""
    return WeightedBoundaryGraph(
        base.vertices,
        [(u, v, w * PLANTED_BUG_SCALE) for (u, v, w) in base.weighted_edges()],
        base.measures(),
        base.boundary,
    )


def _summary(report):
    return OrderedDict(
        [("verdict", report.verdict), ("min_slack", report.min_residual())]
    )


def run_trial(config, i):
    """Run trial i of config and return its summary as a dict."""
    rng = np.random.default_rng([config.seed, i])
    tol = config.tolerances
    kind = trial_kind(config, i)
    if kind == "tree":
        ambient, base = tree_pair(rng, config)
    else:
        ambient, base = comb_pair(rng, config)

    reports = OrderedDict()
    if config.planted_bug:
        reports["monotonicity"] = verify_monotonicity(
            ambient, plant_bug(base), tol, weights_from_ambient=False
        )
    else:
        reports["monotonicity"] = verify_monotonicity(ambient, base, tol)
    interior = ambient.interior_list
    z = None
    if interior and ambient.boundary:
        z = interior[int(rng.integers(0, len(interior)))]
        reports["wedge-identity"] = verify_wedge_identity(ambient, z, tol)
    if kind == "tree" and ambient.is_unit_weight():
        reports["isodiametric"] = verify_estimates("isodiametric", {}, ambient, tolerances=tol)
    if kind == "comb":
        reports["rigidity-geometric"] = verify_rigidity_geometric(ambient, base, tol)

    out = OrderedDict()
    out["trial"] = i
    out["kind"] = kind
    out["vertices"] = len(ambient)
    out["checks"] = OrderedDict((name, _summary(r)) for (name, r) in reports.items())
    out["converse_instance"] = bool(
        "rigidity-geometric" in reports
        and reports["rigidity-geometric"].data.get("converse_instance")
    )
    failed = [name for (name, r) in reports.items() if r.verdict == FAIL]
    out["failures"] = failed
    if failed:
        out["witness"] = OrderedDict(
            [
                ("ambient", graph_to_dict(ambient)),
                ("base", graph_to_dict(plant_bug(base) if config.planted_bug else base)),
                ("z", z),
                ("reports", OrderedDict((n, reports[n].as_dict()) for n in failed)),
            ]
        )
    return out


def _run_trial(args):
    return run_trial(*args)


def fuzz(config=None):
    """Run every trial of config and return the aggregate VerdictReport.

    The aggregate residual of each check is its smallest slack over all
    trials; a failure is recorded per failing trial and check.
    """
    if config is None:
        config = FuzzConfig()
    jobs = [(config, i) for i in range(config.trials)]
    if config.workers > 1 and config.trials > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            trials = list(pool.map(_run_trial, jobs))
    else:
        trials = []
        for job in jobs:
            trials.append(_run_trial(job))
            if (job[1] + 1) % 50 == 0:
                log.info("fuzz: %d of %d trials done", job[1] + 1, config.trials)

    report = VerdictReport("fuzz", config.tolerances)
    slack = OrderedDict()
    skipped = OrderedDict()
    converse = 0
    for t in trials:
        for name, check in t["checks"].items():
            if check["verdict"] == HYPOTHESIS_NOT_MET:
                skipped[name] = skipped.get(name, 0) + 1
                continue
            slack[name] = min(slack.get(name, np.inf), check["min_slack"])
        for name in t["failures"]:
            report.fail("trial_%d:%s" % (t["trial"], name), t["witness"])
        if t["converse_instance"]:
            converse += 1
            log.warning(
                "trial %d: lambda_1 bound holds although the equalities fail",
                t["trial"],
            )
    for name, s in slack.items():
        report.residual(name, s)

    report.data["seed"] = config.seed
    report.data["trials"] = config.trials
    report.data["mix"] = config.mix
    report.data["weighted"] = config.weighted
    report.data["planted_bug"] = config.planted_bug
    report.data["violations"] = sum(len(t["failures"]) for t in trials)
    report.data["converse_instances"] = converse
    report.data["hypothesis_not_met"] = skipped
    report.data["trial_summaries"] = trials
    report.conclude()
    log.info(
        "fuzz: %d trials, %d violations", config.trials, report.data["violations"]
    )
    return report
