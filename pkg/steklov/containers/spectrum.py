# -*- coding: utf-8 -*-

#    steklov - Steklov spectra of graphs with boundary, spectrum module.
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

"""Containers for computed and closed-form Steklov spectra.

Spectra only store the |B| finite eigenvalues of the operator. Asking for
an index past |B| does not read a sentinel out of the list: `sigma(i)`
always returns an Eigenvalue, and an Eigenvalue knows whether it is the
conventional +infinity.
"""
from __future__ import absolute_import

import math
from collections import namedtuple

import numpy as np

from steklov.containers.functions import VertexFunction
from steklov.core.tolerances import resolve


class Eigenvalue(namedtuple("Eigenvalue", ["index", "value"])):

    """The i-th eigenvalue of a spectrum, possibly +infinity.

    >>> Eigenvalue(3, None).is_infinite
    True
    >>> float(Eigenvalue(3, None))
    inf
    >>> float(Eigenvalue(1, 0.5))
    0.5
    """

    __slots__ = ()

    @property
    def is_infinite(self):
        return self.value is None

    def __float__(self):
        return math.inf if self.value is None else float(self.value)


def group_indices(values, tolerances=None):
    """Group sorted values into runs of equal eigenvalues.

    Return 1-based inclusive [first, last] index pairs.

    >>> group_indices([0.0, 0.5, 0.5 + 1e-12, 1.0])
    [[1, 1], [2, 3], [4, 4]]
    """
    tol = resolve(tolerances)
    groups = []
    for i, val in enumerate(values):
        if groups and tol.close(values[groups[-1][0] - 1], val):
            groups[-1][1] = i + 1
        else:
            groups.append([i + 1, i + 1])
    return groups


class SteklovSpectrum(object):

    """Eigenvalues and eigenbasis of a Dirichlet-to-Neumann operator.

    eigenvalues is ascending. boundary_vectors holds the eigenvectors as
    columns, indexed by graph.boundary_list and orthonormal for the
    boundary inner product. extensions holds their harmonic extensions as
    columns indexed by graph.vertices.
    """

    zero_set = frozenset()

    def __init__(self, graph, eigenvalues, boundary_vectors, extensions):
        self.graph = graph
        self.eigenvalues = np.asarray(eigenvalues, dtype=float)
        self.boundary_vectors = np.asarray(boundary_vectors, dtype=float)
        self.extensions = np.asarray(extensions, dtype=float)
        for arr in (self.eigenvalues, self.boundary_vectors, self.extensions):
            arr.flags.writeable = False

    def __len__(self):
        return self.eigenvalues.shape[0]

    def __iter__(self):
        return iter(self.eigenvalues.tolist())

    def sigma(self, i):
        """Return the i-th eigenvalue (1-based); +infinity past the end."""
        if i < 1:
            raise IndexError("Eigenvalue indices start at 1")
        if i > len(self):
            return Eigenvalue(i, None)
        return Eigenvalue(i, float(self.eigenvalues[i - 1]))

    def eigenfunction(self, i):
        """Return the harmonic extension of the i-th eigenvector."""
        return VertexFunction(self.graph.vertices, self.extensions[:, i - 1])

    def eigenbasis(self):
        return [self.eigenfunction(i) for i in range(1, len(self) + 1)]

    def multiplicity_groups(self, tolerances=None):
        return group_indices(self.eigenvalues.tolist(), tolerances)

    def eigenspace(self, i, tolerances=None):
        """Return the 1-based indices of every eigenvalue equal to the i-th."""
        for first, last in self.multiplicity_groups(tolerances):
            if first <= i <= last:
                return list(range(first, last + 1))
        raise IndexError("No eigenvalue with index %d" % i)

    def __repr__(self):
        return "<%s %s>" % (type(self).__name__, np.round(self.eigenvalues, 10).tolist())


class DirichletSteklovSpectrum(SteklovSpectrum):

    """Spectrum of the DtN operator with vanishing Dirichlet data on a zero
    set Z inside the interior."""

    def __init__(self, graph, zero_set, eigenvalues, boundary_vectors, extensions):
        SteklovSpectrum.__init__(self, graph, eigenvalues, boundary_vectors, extensions)
        self.zero_set = frozenset(zero_set)

    def lambda_(self, i):
        return self.sigma(i)

    @property
    def lambda1(self):
        """The first eigenvalue; +infinity when the boundary is empty."""
        return float(self.sigma(1))


class ClosedFormSpectrum(object):

    """A spectrum known in closed form for one of the graph families.

    values holds the distinct eigenvalues in ascending order and
    multiplicities their multiplicities.

    >>> c = ClosedFormSpectrum('regular-star', {'r': 3, 'l': 2}, [0.0, 0.5], [1, 2])
    >>> c.sigma
    [0.0, 0.5, 0.5]
    >>> len(c)
    3
    """

    def __init__(self, family, params, values, multiplicities):
        if len(values) != len(multiplicities):
            raise ValueError("values and multiplicities differ in length")
        self.family = family
        self.params = dict(params)
        self.values = [float(v) for v in values]
        self.multiplicities = [int(k) for k in multiplicities]

    @classmethod
    def from_list(cls, family, params, sigma, tolerances=None):
        """Build from a sorted list with repetitions."""
        sigma = sorted(float(s) for s in sigma)
        values, mults = [], []
        for first, last in group_indices(sigma, tolerances):
            values.append(sigma[first - 1])
            mults.append(last - first + 1)
        return cls(family, params, values, mults)

    @property
    def sigma(self):
        out = []
        for val, k in zip(self.values, self.multiplicities):
            out.extend([val] * k)
        return out

    def __len__(self):
        return sum(self.multiplicities)

    def as_dict(self):
        return {"family": self.family, "params": dict(self.params), "sigma": self.sigma}

    def __repr__(self):
        return "<ClosedFormSpectrum %s %r %r>" % (
            self.family,
            self.params,
            list(zip(self.values, self.multiplicities)),
        )
