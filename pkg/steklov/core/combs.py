# -*- coding: utf-8 -*-

#    steklov - Steklov spectra of graphs with boundary, combs module.
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

"""Combs, teeth, wedge sums and constant extensions.

An ambient graph is a comb over a connected subgraph (its base) when
deleting the base edges leaves exactly one connected component, the tooth,
per base vertex. Trees are combs over each of their subtrees.

>>> from steklov.core.families import make_path
>>> p = make_path(3)
>>> base = p.subgraph(['v1', 'v2'])
>>> d = comb_decompose(p, base)
>>> sorted(d.tooth('v1')), sorted(d.tooth('v2'))
(['v0', 'v1'], ['v2', 'v3'])
>>> is_homotopy_faithful(p, base)
True
"""
from __future__ import absolute_import

import logging

import networkx as nx

from steklov.containers.decomposition import ToothDecomposition
from steklov.containers.functions import VertexFunction
from steklov.containers.graph import WeightedBoundaryGraph
from steklov.core.errors import (
    NotACombError,
    NotASubgraphError,
    ParameterError,
    WedgePointError,
)
from steklov.core.graphs import is_subgraph, require_connected

log = logging.getLogger(__name__)


def comb_decompose(ambient, base):
    """Return the ToothDecomposition of ambient over base.

    Raise NotASubgraphError if base is not a subgraph of ambient (exact id
    containment), DisconnectedGraphError if either graph is disconnected
    and NotACombError if deleting the base edges does not leave exactly
    one component per base vertex.
    """
    if not is_subgraph(base, ambient):
        raise NotASubgraphError("The base graph is not a subgraph of the ambient graph")
    require_connected(ambient, "ambient graph")
    require_connected(base, "base graph")

    g = ambient.to_networkx()
    g.remove_edges_from(base.edges)
    components = list(nx.connected_components(g))
    if len(components) != len(base):
        raise NotACombError(
            "Deleting the base edges leaves %d components, expecting %d"
            % (len(components), len(base))
        )
    teeth = {}
    for comp in components:
        roots = [v for v in comp if v in base]
        if len(roots) != 1:
            raise NotACombError(
                "A component contains %d base vertices: %s"
                % (len(roots), sorted(roots))
            )
        teeth[roots[0]] = comp
    log.debug("comb over %d base vertices, %d ambient vertices", len(base), len(ambient))
    return ToothDecomposition(base, ambient, teeth)


def is_homotopy_faithful(ambient, base):
    """Return True if every tooth of the comb is a tree.

    Then every cycle of ambient lies in base, so the inclusion is an
    isomorphism on fundamental groups. Raise NotACombError when ambient is
    not a comb over base.
    """
    decomp = comb_decompose(ambient, base)
    return all(
        decomp.tooth_edge_count(x) == len(decomp.tooth(x)) - 1 for x in base.vertices
    )


def _glued_measure(g1, z1, g2, z2, unit_measure):
    if unit_measure and g1.is_unit_weight() and g2.is_unit_weight():
        return 1.0
    return g1.m(z1) + g2.m(z2)


def _fresh_prefix(taken, names, prefix):
    """Return prefix, or prefix with a counter inserted before its last
    character, such that no prefixed name lies in taken."""
    candidate, k = prefix, 1
    while any(candidate + v in taken for v in names):
        candidate = "%s%d%s" % (prefix[:-1], k, prefix[-1:])
        k += 1
    if candidate != prefix:
        log.debug("wedge prefix %r collides, using %r", prefix, candidate)
    return candidate


def wedge_sum(g1, z1, g2, z2, prefixes=("", "w:"), unit_measure=False):
    """Glue g1 and g2 by identifying the interior vertices z1 and z2.

    Vertex ids of g1 and g2 receive the respective prefixes; the glued
    vertex is named after z1. When a prefixed id of g2 would coincide
    with one of g1, g2 gets a numbered prefix instead ('w1:', 'w2:', ...).
    The boundary is the disjoint union of both boundaries. The glued
    vertex carries m(z1) + m(z2), or 1 when unit_measure is set and both
    graphs have unit weight.

    Raise WedgePointError if z1 or z2 is a boundary vertex.

    Example:
    >>> from steklov.core.families import make_star
    >>> s = make_star([1, 1])
    >>> w = wedge_sum(s, 'o', s, 'o', unit_measure=True)
    >>> sorted(w.neighbors('o'))
    ['a1.1', 'a2.1', 'w:a1.1', 'w:a2.1']
    >>> w.m('o')
    1.0
    """
    for (g, z) in ((g1, z1), (g2, z2)):
        if z not in g:
            raise WedgePointError("Wedge point '%s' is not a vertex" % z)
        if z in g.boundary:
            raise WedgePointError("Wedge point '%s' lies on the boundary" % z)
    p1, p2 = prefixes
    glued = p1 + z1
    p2 = _fresh_prefix(
        set(p1 + v for v in g1.vertices), [v for v in g2.vertices if v != z2], p2
    )

    def name2(v):
        return glued if v == z2 else p2 + v

    vertices = [p1 + v for v in g1.vertices]
    vertices += [name2(v) for v in g2.vertices if v != z2]
    measure = dict((p1 + v, g1.m(v)) for v in g1.vertices)
    measure.update((name2(v), g2.m(v)) for v in g2.vertices if v != z2)
    measure[glued] = _glued_measure(g1, z1, g2, z2, unit_measure)
    edges = [(p1 + u, p1 + v, w) for (u, v, w) in g1.weighted_edges()]
    edges += [(name2(u), name2(v), w) for (u, v, w) in g2.weighted_edges()]
    boundary = [p1 + b for b in g1.boundary] + [name2(b) for b in g2.boundary]
    return WeightedBoundaryGraph(vertices, edges, measure, boundary)


def wedge_power(graph, z, r, unit_measure=False):
    """Return the wedge sum of r copies of graph at z.

    Copy i has its vertices prefixed with 'i:'; the common vertex keeps the
    name z. r = 1 returns a relabelled copy of graph.

    Example:
    >>> from steklov.core.families import make_path
    >>> arm = make_path(2).with_boundary(['v2'])
    >>> star = wedge_power(arm, 'v0', 3, unit_measure=True)
    >>> len(star), sorted(star.boundary)
    (7, ['1:v2', '2:v2', '3:v2'])
    """
    if r < 1:
        raise ParameterError("Expecting r >= 1, got %r" % r)
    if z not in graph or z in graph.boundary:
        raise WedgePointError("Wedge point '%s' is not an interior vertex" % z)
    result = graph.relabel(lambda v: v if v == z else "1:" + v)
    for i in range(2, r + 1):
        result = wedge_sum(
            result, z, graph, z, prefixes=("", "%d:" % i), unit_measure=unit_measure
        )
    return result


def constant_extension(decomp, f):
    """Extend f from the base to the ambient graph, constant on each tooth.

    f is a VertexFunction on the base vertices (or a mapping).
    """
    get = f.__getitem__
    return VertexFunction(
        decomp.ambient.vertices, [get(decomp.owner(v)) for v in decomp.ambient.vertices]
    )
