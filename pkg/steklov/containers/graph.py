# -*- coding: utf-8 -*-

#    steklov - Steklov spectra of graphs with boundary, graph module.
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

"""The WeightedBoundaryGraph container.

A weighted graph with boundary is a finite simple graph together with a
positive vertex measure, a positive edge weight and a set of boundary
vertices. Everything else in steklov (Laplacians, Dirichlet-to-Neumann
maps, combs, wedge sums, the theorem verifiers) takes one of these as
input.

Graphs are immutable: every operation that "changes" a graph returns a new
one. Vertex ids are strings and keep the order in which they were given,
which fixes the row order of every matrix built from the graph.
"""
from __future__ import absolute_import

import six
import networkx as nx

from steklov.core.errors import (
    DuplicateEdgeError,
    DuplicateVertexError,
    GraphFormatError,
    LoopEdgeError,
    NonPositiveWeightError,
    UnknownEndpointError,
)


class WeightedBoundaryGraph(object):

    """A simple graph with vertex measure, edge weight and boundary.

    Use steklov.core.graphs.build_graph to construct one from plain
    specifications; the constructor expects already parsed values:

    >>> g = WeightedBoundaryGraph(['a', 'b'], [('a', 'b', 2.0)],
    ...                           {'a': 1.0, 'b': 1.0}, ['a', 'b'])
    >>> g.w('b', 'a')
    2.0
    >>> sorted(g.boundary)
    ['a', 'b']
    >>> g.interior
    frozenset()
    """

    __slots__ = (
        "_vertices",
        "_index",
        "_edges",
        "_weight",
        "_measure",
        "_boundary",
        "_adjacency",
    )

    def __init__(self, vertices, edges, measure, boundary):
        self._vertices = tuple(vertices)
        self._index = {}
        for v in self._vertices:
            if not isinstance(v, six.string_types):
                raise GraphFormatError("Vertex id %r is not a string" % (v,))
            if v in self._index:
                raise DuplicateVertexError("Vertex '%s' is given twice" % v)
            self._index[v] = len(self._index)

        self._measure = {}
        for v in self._vertices:
            m = float(measure.get(v, 1.0))
            if not m > 0.0:
                raise NonPositiveWeightError(
                    "Measure of vertex '%s' must be positive, got %r" % (v, m)
                )
            self._measure[v] = m

        self._adjacency = dict((v, []) for v in self._vertices)
        self._weight = {}
        canonical = []
        for (u, v, w) in edges:
            for x in (u, v):
                if x not in self._index:
                    raise UnknownEndpointError(
                        "Edge %s-%s uses the unknown vertex '%s'" % (u, v, x)
                    )
            if u == v:
                raise LoopEdgeError("Loop at vertex '%s'" % u)
            key = frozenset((u, v))
            if key in self._weight:
                raise DuplicateEdgeError("Edge %s-%s is given twice" % (u, v))
            w = float(w)
            if not w > 0.0:
                raise NonPositiveWeightError(
                    "Weight of edge %s-%s must be positive, got %r" % (u, v, w)
                )
            self._weight[key] = w
            if self._index[u] > self._index[v]:
                u, v = v, u
            canonical.append((u, v))
            self._adjacency[u].append(v)
            self._adjacency[v].append(u)
        self._edges = tuple(sorted(canonical, key=self._edge_key))
        for v in self._adjacency:
            self._adjacency[v] = tuple(sorted(self._adjacency[v], key=self._index.get))

        boundary = frozenset(boundary)
        for b in boundary:
            if b not in self._index:
                raise UnknownEndpointError("Boundary vertex '%s' is unknown" % b)
        self._boundary = boundary

    def _edge_key(self, e):
        return (self._index[e[0]], self._index[e[1]])

    @property
    def vertices(self):
        """The vertex ids in construction order."""
        return self._vertices

    @property
    def edges(self):
        """The edges as (u, v) pairs with u before v in vertex order."""
        return self._edges

    @property
    def boundary(self):
        return self._boundary

    @property
    def interior(self):
        return frozenset(v for v in self._vertices if v not in self._boundary)

    @property
    def boundary_list(self):
        """The boundary vertices in vertex order."""
        return [v for v in self._vertices if v in self._boundary]

    @property
    def interior_list(self):
        return [v for v in self._vertices if v not in self._boundary]

    def index(self, v):
        """Return the row of vertex v in every matrix built from this graph."""
        return self._index[v]

    def m(self, v):
        """Return the measure of vertex v."""
        return self._measure[v]

    def w(self, u, v):
        """Return the weight of the edge uv, or 0.0 if u and v are not
        adjacent."""
        return self._weight.get(frozenset((u, v)), 0.0)

    def has_edge(self, u, v):
        return frozenset((u, v)) in self._weight

    def neighbors(self, v):
        return self._adjacency[v]

    def degree(self, v):
        return len(self._adjacency[v])

    def measures(self):
        """Return a copy of the vertex measure as a dict."""
        return dict(self._measure)

    def weighted_edges(self):
        """Return the edges as (u, v, weight) triples."""
        return [(u, v, self._weight[frozenset((u, v))]) for (u, v) in self._edges]

    def is_unit_weight(self):
        return all(m == 1.0 for m in self._measure.values()) and all(
            w == 1.0 for w in self._weight.values()
        )

    def is_connected(self):
        return len(self._vertices) > 0 and nx.is_connected(self.to_networkx())

    def to_networkx(self):
        """Return a fresh networkx.Graph carrying 'measure', 'boundary' and
        'weight' attributes."""
        g = nx.Graph()
        for v in self._vertices:
            g.add_node(v, measure=self._measure[v], boundary=v in self._boundary)
        for (u, v, w) in self.weighted_edges():
            g.add_edge(u, v, weight=w)
        return g

    def with_boundary(self, boundary):
        """Return the same weighted graph with another boundary."""
        return WeightedBoundaryGraph(
            self._vertices, self.weighted_edges(), self._measure, boundary
        )

    def subgraph(self, vertices, boundary=None):
        """Return the induced subgraph on vertices.

        The measure and weight are restricted. The boundary defaults to the
        boundary vertices that survive.
        """
        keep = set(vertices)
        for v in keep:
            if v not in self._index:
                raise UnknownEndpointError("Vertex '%s' is unknown" % v)
        ordered = [v for v in self._vertices if v in keep]
        edges = [(u, v, w) for (u, v, w) in self.weighted_edges() if u in keep and v in keep]
        if boundary is None:
            boundary = self._boundary & keep
        return WeightedBoundaryGraph(ordered, edges, self._measure, boundary)

    def relabel(self, mapping):
        """Return a copy with every vertex id v replaced by mapping(v).

        mapping can be a dict or a callable.
        """
        f = mapping.__getitem__ if hasattr(mapping, "__getitem__") else mapping
        return WeightedBoundaryGraph(
            [f(v) for v in self._vertices],
            [(f(u), f(v), w) for (u, v, w) in self.weighted_edges()],
            dict((f(v), m) for (v, m) in self._measure.items()),
            [f(b) for b in self._boundary],
        )

    def _signature(self):
        return (
            frozenset(self._vertices),
            frozenset(self._weight.items()),
            frozenset(self._measure.items()),
            self._boundary,
        )

    def __eq__(self, other):
        if not isinstance(other, WeightedBoundaryGraph):
            return NotImplemented
        return self._signature() == other._signature()

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash(self._signature())

    def __len__(self):
        return len(self._vertices)

    def __contains__(self, v):
        return v in self._index

    def __iter__(self):
        return iter(self._vertices)

    def __repr__(self):
        return "<WeightedBoundaryGraph |V|=%d |E|=%d |B|=%d>" % (
            len(self._vertices),
            len(self._edges),
            len(self._boundary),
        )
