# -*- coding: utf-8 -*-

#    steklov - Steklov spectra of graphs with boundary, functions module.
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

"""Vertex functions and flows.

A VertexFunction is an element of R^V(G): one real value per vertex, kept
in the vertex order of the graph it was made for. An EdgeFunction is a
flow: a skew-symmetric function on ordered pairs of adjacent vertices,
zero on non-adjacent pairs.
"""
from __future__ import absolute_import

import numpy as np


class VertexFunction(object):

    """A real valued function on a fixed, ordered vertex set.

    >>> f = VertexFunction(['a', 'b'], [1.0, 2.0])
    >>> f['b']
    2.0
    >>> (f + f)['a']
    2.0
    >>> (3 * f).as_dict() == {'a': 3.0, 'b': 6.0}
    True
    """

    __slots__ = ("_vertices", "_index", "_values")

    def __init__(self, vertices, values):
        self._vertices = tuple(vertices)
        self._index = dict((v, i) for (i, v) in enumerate(self._vertices))
        if hasattr(values, "keys"):
            values = [values[v] for v in self._vertices]
        arr = np.array(values, dtype=float).reshape(-1)
        if arr.shape[0] != len(self._vertices):
            raise ValueError(
                "Expecting %d values, got %d" % (len(self._vertices), arr.shape[0])
            )
        arr.flags.writeable = False
        self._values = arr

    @classmethod
    def on(cls, graph, values):
        """Build a function on the vertices of graph."""
        return cls(graph.vertices, values)

    @classmethod
    def constant(cls, graph, c=1.0):
        return cls(graph.vertices, np.full(len(graph), float(c)))

    @property
    def vertices(self):
        return self._vertices

    @property
    def values(self):
        """The values as a read-only numpy array in vertex order."""
        return self._values

    def as_dict(self):
        return dict(zip(self._vertices, self._values.tolist()))

    def restrict(self, vertices):
        """Return the restriction to the given vertices (kept in their
        order)."""
        vertices = list(vertices)
        return VertexFunction(vertices, [self[v] for v in vertices])

    def max_abs(self, vertices=None):
        if vertices is None:
            vals = self._values
        else:
            vals = np.array([self[v] for v in vertices], dtype=float)
        return float(np.max(np.abs(vals))) if vals.size else 0.0

    def _check(self, other):
        if self._vertices != other._vertices:
            raise ValueError("Vertex functions live on different vertex sets")

    def __getitem__(self, v):
        return float(self._values[self._index[v]])

    def __contains__(self, v):
        return v in self._index

    def __len__(self):
        return len(self._vertices)

    def __add__(self, other):
        self._check(other)
        return VertexFunction(self._vertices, self._values + other._values)

    def __sub__(self, other):
        self._check(other)
        return VertexFunction(self._vertices, self._values - other._values)

    def __mul__(self, c):
        return VertexFunction(self._vertices, self._values * float(c))

    __rmul__ = __mul__

    def __neg__(self):
        return VertexFunction(self._vertices, -self._values)

    def __eq__(self, other):
        if not isinstance(other, VertexFunction):
            return NotImplemented
        return self._vertices == other._vertices and np.array_equal(
            self._values, other._values
        )

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def __repr__(self):
        return "VertexFunction(%r)" % self.as_dict()


class EdgeFunction(object):

    """A flow: a skew-symmetric function on ordered adjacent pairs.

    >>> a = EdgeFunction([('a', 'b')], [1.5])
    >>> a['a', 'b'], a['b', 'a'], a['a', 'c']
    (1.5, -1.5, 0.0)
    """

    __slots__ = ("_values",)

    def __init__(self, pairs, values):
        self._values = {}
        for ((x, y), val) in zip(pairs, values):
            if (y, x) in self._values:
                raise ValueError("Edge %s-%s is given twice" % (x, y))
            self._values[(x, y)] = float(val)

    def __getitem__(self, pair):
        x, y = pair
        if (x, y) in self._values:
            return self._values[(x, y)]
        if (y, x) in self._values:
            return -self._values[(y, x)]
        return 0.0

    def items(self):
        """Return ((x, y), value) for one orientation of every edge."""
        return list(self._values.items())

    def __len__(self):
        return len(self._values)

    def __repr__(self):
        return "EdgeFunction(%r)" % self._values
