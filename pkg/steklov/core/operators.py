# -*- coding: utf-8 -*-

#    steklov - Steklov spectra of graphs with boundary, operators module.
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

"""The discrete calculus of a weighted graph with boundary.

The Laplacian is stored factored as M^-1 (-L_w): L_w is the measure-free
stiffness matrix and M = diag(m). All matrices are dense numpy arrays whose
rows follow graph.vertices.

>>> from steklov.core.graphs import build_graph
>>> g = build_graph(['a', 'b'], [('a', 'b')], boundary=['a', 'b'])
>>> laplacian_apply(g, {'a': 0.0, 'b': 1.0}).as_dict() == {'a': 1.0, 'b': -1.0}
True
>>> dirichlet_energy(g, {'a': 0.0, 'b': 1.0})
1.0
"""
from __future__ import absolute_import

import numpy as np

from steklov.containers.functions import EdgeFunction, VertexFunction
from steklov.core.errors import NotBoundaryVertexError


def as_vector(graph, f):
    """Return the values of f as a float array in the vertex order of graph.

    f can be a VertexFunction, a mapping from vertex ids or a sequence
    already in vertex order.
    """
    if isinstance(f, VertexFunction):
        if f.vertices == graph.vertices:
            return np.array(f.values)
        return np.array([f[v] for v in graph.vertices], dtype=float)
    if hasattr(f, "keys"):
        return np.array([f[v] for v in graph.vertices], dtype=float)
    arr = np.asarray(f, dtype=float).reshape(-1)
    if arr.shape[0] != len(graph):
        raise ValueError("Expecting %d values, got %d" % (len(graph), arr.shape[0]))
    return arr


def stiffness_matrix(graph):
    """Return L_w with (L_w)_xx = sum_y w_xy and (L_w)_xy = -w_xy."""
    n = len(graph)
    L = np.zeros((n, n))
    for (u, v, w) in graph.weighted_edges():
        i, j = graph.index(u), graph.index(v)
        L[i, j] -= w
        L[j, i] -= w
        L[i, i] += w
        L[j, j] += w
    return L


def mass_vector(graph):
    return np.array([graph.m(v) for v in graph.vertices])


def laplacian_matrix(graph):
    """Return the matrix of Delta_G = M^-1 (-L_w)."""
    return -stiffness_matrix(graph) / mass_vector(graph)[:, np.newaxis]


def laplacian_apply(graph, f):
    """Return Delta_G f, (1/m_x) sum_y (f(y) - f(x)) w_xy."""
    x = as_vector(graph, f)
    out = np.zeros(len(graph))
    for (u, v, w) in graph.weighted_edges():
        i, j = graph.index(u), graph.index(v)
        diff = (x[j] - x[i]) * w
        out[i] += diff
        out[j] -= diff
    return VertexFunction(graph.vertices, out / mass_vector(graph))


def exterior_differential(graph, f):
    """Return the flow df(x, y) = f(y) - f(x)."""
    x = as_vector(graph, f)
    return EdgeFunction(
        graph.edges,
        [x[graph.index(v)] - x[graph.index(u)] for (u, v) in graph.edges],
    )


def measure_of(graph, vertices):
    """Return m(A), the total measure of a vertex set."""
    return float(sum(graph.m(v) for v in vertices))


def inner_product(graph, f, g, vertices=None):
    """Return <f, g>_A = sum_{x in A} f(x) g(x) m_x; A defaults to V(G)."""
    x, y = as_vector(graph, f), as_vector(graph, g)
    m = mass_vector(graph)
    if vertices is None:
        return float(np.dot(x * y, m))
    idx = [graph.index(v) for v in vertices]
    return float(np.dot(x[idx] * y[idx], m[idx]))


def edge_inner_product(graph, alpha, beta):
    """Return <alpha, beta>_G = sum over edges of alpha(x,y) beta(x,y) w_xy."""
    return float(
        sum(alpha[u, v] * beta[u, v] * w for (u, v, w) in graph.weighted_edges())
    )


def dirichlet_energy(graph, f):
    """Return <df, df>_G."""
    x = as_vector(graph, f)
    return float(np.dot(x, stiffness_matrix(graph).dot(x)))


def normal_derivative(graph, f, x):
    """Return the outward normal derivative of f at the boundary vertex x,
    (1/m_x) sum_y (f(x) - f(y)) w_xy = -Delta_G f(x).

    Raise NotBoundaryVertexError unless x is in B.
    """
    if x not in graph.boundary:
        raise NotBoundaryVertexError("Vertex '%s' is not a boundary vertex" % x)
    vals = as_vector(graph, f)
    i = graph.index(x)
    total = sum(
        (vals[i] - vals[graph.index(y)]) * graph.w(x, y) for y in graph.neighbors(x)
    )
    return float(total / graph.m(x))


def green_residual(graph, f, g):
    """Return <df, dg>_G + <Delta f, g>_Omega - <df/dn, g>_B.

    Green's formula says this is zero up to roundoff.
    """
    lap = laplacian_apply(graph, f)
    dn = dict(
        (b, normal_derivative(graph, f, b)) for b in graph.boundary_list
    )
    y = as_vector(graph, g)
    lhs = edge_inner_product(
        graph, exterior_differential(graph, f), exterior_differential(graph, g)
    )
    interior = sum(
        lap[v] * y[graph.index(v)] * graph.m(v) for v in graph.interior_list
    )
    boundary = sum(dn[b] * y[graph.index(b)] * graph.m(b) for b in graph.boundary_list)
    return float(lhs + interior - boundary)
