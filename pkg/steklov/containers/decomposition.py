# -*- coding: utf-8 -*-

#    steklov - Steklov spectra of graphs with boundary, decomposition module.
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

"""The ToothDecomposition container: a witness that a graph is a comb over
one of its subgraphs.

Deleting the edges of the base G from the ambient graph leaves exactly one
connected component per base vertex x. That component is the tooth at x.
"""
from __future__ import absolute_import


class ToothDecomposition(object):

    """Map from every base vertex to the vertex set of its tooth.

    Build one with steklov.core.combs.comb_decompose.
    """

    def __init__(self, base, ambient, teeth):
        self.base = base
        self.ambient = ambient
        self._teeth = dict((x, frozenset(t)) for (x, t) in teeth.items())
        self._owner = {}
        for x, tooth in self._teeth.items():
            for v in tooth:
                self._owner[v] = x
        self._boundaries = dict(
            (x, tooth & ambient.boundary) for (x, tooth) in self._teeth.items()
        )

    @property
    def teeth(self):
        return dict(self._teeth)

    @property
    def tooth_boundaries(self):
        return dict(self._boundaries)

    def tooth(self, x):
        """Return the vertex set of the tooth at base vertex x."""
        return self._teeth[x]

    def tooth_boundary(self, x):
        """Return the ambient boundary vertices lying in the tooth at x."""
        return self._boundaries[x]

    def owner(self, v):
        """Return the base vertex whose tooth contains the ambient vertex v."""
        return self._owner[v]

    def tooth_measure(self, x):
        """Return the total measure of the tooth boundary at x."""
        return sum(self.ambient.m(v) for v in self._boundaries[x])

    def tooth_graph(self, x, boundary=None):
        """Return the tooth at x as a weighted graph.

        Its boundary defaults to the tooth boundary at x.
        """
        if boundary is None:
            boundary = self._boundaries[x]
        return self.ambient.subgraph(self._teeth[x], boundary)

    def tooth_edge_count(self, x):
        tooth = self._teeth[x]
        return sum(1 for (u, v) in self.ambient.edges if u in tooth and v in tooth)

    def __len__(self):
        return len(self._teeth)

    def __iter__(self):
        return iter(self.base.vertices)

    def __repr__(self):
        return "<ToothDecomposition %d teeth>" % len(self._teeth)
