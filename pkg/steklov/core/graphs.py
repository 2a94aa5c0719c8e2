# -*- coding: utf-8 -*-

#    steklov - Steklov spectra of graphs with boundary, graphs module.
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

"""Building weighted graphs with boundary and reading off their
combinatorics.

Vertices can be given as plain string ids or as dicts in the graph JSON
layout, edges as (u, v), (u, v, weight) or dicts:

>>> g = build_graph(['a', 'b', 'c'], [('a', 'b'), ('b', 'c', 2.0)], boundary=['a', 'c'])
>>> degree(g, 'b')
2
>>> sorted(combinatorial_boundary(g))
['a', 'c']
>>> diameter(g)
2
"""
from __future__ import absolute_import

import six
import networkx as nx

from steklov.containers.graph import WeightedBoundaryGraph
from steklov.core.errors import DisconnectedGraphError, GraphFormatError

_VERTEX_KEYS = frozenset(["id", "measure", "boundary"])
_EDGE_KEYS = frozenset(["u", "v", "weight"])


def build_graph(vertex_specs, edge_specs, boundary=None):
    """Validate the specifications and return a WeightedBoundaryGraph.

    Measures and weights default to 1.0 and the boundary flag to False.
    When boundary is given it replaces the per vertex flags.

    Raise DuplicateVertexError, UnknownEndpointError, LoopEdgeError,
    DuplicateEdgeError or NonPositiveWeightError on invalid input.

    Example:
    >>> build_graph(['a'], [], boundary=['a'])
    <WeightedBoundaryGraph |V|=1 |E|=0 |B|=1>
    """
    ids, measure, flagged = [], {}, []
    for spec in vertex_specs:
        if isinstance(spec, six.string_types):
            spec = {"id": spec}
        if not hasattr(spec, "keys"):
            raise GraphFormatError("Don't know what to do with vertex %r" % (spec,))
        unknown = set(spec.keys()) - _VERTEX_KEYS
        if unknown:
            raise GraphFormatError("Unknown vertex fields %s" % sorted(unknown))
        if "id" not in spec:
            raise GraphFormatError("Vertex without id: %r" % (spec,))
        vid = spec["id"]
        ids.append(vid)
        measure[vid] = spec.get("measure", 1.0)
        if spec.get("boundary", False):
            flagged.append(vid)

    edges = []
    for spec in edge_specs:
        if hasattr(spec, "keys"):
            unknown = set(spec.keys()) - _EDGE_KEYS
            if unknown:
                raise GraphFormatError("Unknown edge fields %s" % sorted(unknown))
            if "u" not in spec or "v" not in spec:
                raise GraphFormatError("Edge without endpoints: %r" % (spec,))
            edges.append((spec["u"], spec["v"], spec.get("weight", 1.0)))
        elif len(spec) == 2:
            edges.append((spec[0], spec[1], 1.0))
        elif len(spec) == 3:
            edges.append(tuple(spec))
        else:
            raise GraphFormatError("Don't know what to do with edge %r" % (spec,))

    if boundary is None:
        boundary = flagged
    return WeightedBoundaryGraph(ids, edges, measure, boundary)


def degree(graph, v):
    """Return the number of neighbours of v."""
    return graph.degree(v)


def combinatorial_boundary(graph):
    """Return the vertices of degree at most one.

    For a nontrivial tree this is the leaf set; a lone vertex is its own
    boundary.
    """
    return frozenset(v for v in graph.vertices if graph.degree(v) <= 1)


def leaves(graph):
    """Return the vertices of degree exactly one."""
    return frozenset(v for v in graph.vertices if graph.degree(v) == 1)


def as_combinatorial(graph):
    """Return graph with unit weight and boundary {deg <= 1}."""
    return WeightedBoundaryGraph(
        graph.vertices,
        [(u, v, 1.0) for (u, v) in graph.edges],
        {},
        combinatorial_boundary(graph),
    )


def require_connected(graph, what="graph"):
    if not graph.is_connected():
        raise DisconnectedGraphError("The %s is not connected" % what)


def diameter(graph):
    """Return the largest hop distance between two vertices.

    Edge weights are ignored. Raise DisconnectedGraphError when the graph
    is not connected.
    """
    require_connected(graph)
    if len(graph) == 1:
        return 0
    return nx.diameter(graph.to_networkx())


def is_tree(graph):
    return len(graph) > 0 and nx.is_tree(graph.to_networkx())


def is_subgraph(graph, ambient):
    """Return True if the vertices and edges of graph are vertices and
    edges of ambient (by id)."""
    return all(v in ambient for v in graph.vertices) and all(
        ambient.has_edge(u, v) for (u, v) in graph.edges
    )


def inherits_weights(graph, ambient):
    """Return True if graph carries the measure and weight of ambient
    restricted to its vertices and edges."""
    return all(graph.m(v) == ambient.m(v) for v in graph.vertices) and all(
        graph.w(u, v) == ambient.w(u, v) for (u, v) in graph.edges
    )


def are_isomorphic(g, h):
    """Return True if there is a bijection of vertices preserving edges,
    weights, measures and boundary."""
    return nx.is_isomorphic(
        g.to_networkx(),
        h.to_networkx(),
        node_match=lambda a, b: a["measure"] == b["measure"]
        and a["boundary"] == b["boundary"],
        edge_match=lambda a, b: a["weight"] == b["weight"],
    )


def isolated_boundary(graph):
    """Return the boundary vertices all of whose neighbours are boundary
    vertices too."""
    return frozenset(
        b
        for b in graph.boundary
        if graph.degree(b) > 0 and all(y in graph.boundary for y in graph.neighbors(b))
    )
