# -*- coding: utf-8 -*-

#    steklov - Steklov spectra of graphs with boundary, spectral module.
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

"""Harmonic extensions, Dirichlet-to-Neumann operators and their spectra.

The DtN operator of (G, B) with vanishing Dirichlet data on Z is the Schur
complement

    S = L_BB - L_BF L_FF^-1 L_FB,      F = interior minus Z,

of the stiffness matrix, taken against the boundary mass M_B. Its spectrum
solves S phi = sigma M_B phi, computed through the symmetric matrix
M_B^-1/2 S M_B^-1/2.

Example:
>>> from steklov.core.families import make_path
>>> [round(s, 12) for s in steklov_spectrum(make_path(4))]
[0.0, 0.5]
>>> round(lambda1(make_path(2), zero_set=["v1"]), 12)
1.0
"""
from __future__ import absolute_import

import logging
import math
from collections import OrderedDict

import networkx as nx
import numpy as np
import scipy.linalg

from steklov.containers.functions import VertexFunction
from steklov.containers.spectrum import DirichletSteklovSpectrum, SteklovSpectrum
from steklov.core.errors import (
    ParameterError,
    SingularInteriorError,
    ToleranceAmbiguityError,
)
from steklov.core.graphs import isolated_boundary, require_connected
from steklov.core.operators import mass_vector, stiffness_matrix
from steklov.core.tolerances import resolve

log = logging.getLogger(__name__)

# Seeds of the two random mean-zero bases used to detect Z.
Z_BASIS_SEEDS = (0, 1)


def _zero_set(graph, zero_set):
    zero_set = frozenset(zero_set or ())
    for z in zero_set:
        if z not in graph:
            raise ParameterError("Zero set vertex '%s' is unknown" % z)
        if z in graph.boundary:
            raise ParameterError("Zero set vertex '%s' lies on the boundary" % z)
    return zero_set


def check_interior(graph, zero_set=()):
    """Raise SingularInteriorError if a component of the subgraph induced on
    the interior minus zero_set has no edge to B or zero_set."""
    anchors = graph.boundary | frozenset(zero_set)
    free = [v for v in graph.interior_list if v not in anchors]
    g = graph.to_networkx().subgraph(free)
    for comp in nx.connected_components(g):
        if not any(y in anchors for v in comp for y in graph.neighbors(v)):
            component = sorted(comp, key=graph.index)
            raise SingularInteriorError(
                "Interior component %s reaches neither the boundary nor the "
                "zero set" % component,
                component=component,
            )


class DtNOperator(object):

    """The Dirichlet-to-Neumann operator of a graph, materialised.

    Attributes: boundary (ids, vertex order), zero_set, schur (|B| x |B|),
    mass (the boundary measures) and extension, the |V| x |B| matrix taking
    boundary values to their harmonic extension.
    """

    def __init__(self, graph, zero_set, schur, mass, extension):
        self.graph = graph
        self.zero_set = zero_set
        self.boundary = graph.boundary_list
        self.schur = schur
        self.mass = mass
        self.extension = extension

    def __len__(self):
        return len(self.boundary)

    @property
    def symmetrized(self):
        """Return M_B^-1/2 S M_B^-1/2."""
        d = 1.0 / np.sqrt(self.mass)
        return self.schur * d[:, np.newaxis] * d[np.newaxis, :]

    def apply(self, u):
        """Return Lambda(u) = M_B^-1 S u as an array over the boundary."""
        return self.schur.dot(u) / self.mass

    def extend(self, u):
        return self.extension.dot(u)

    def eigensystem(self, tolerances=None):
        """Return (eigenvalues, vectors) with ascending eigenvalues and
        M_B-orthonormal eigenvector columns.

        Negative roundoff is clamped to zero. Each vector has its first
        clearly nonzero coordinate positive.
        """
        tol = resolve(tolerances)
        n = len(self)
        if n == 0:
            return np.zeros(0), np.zeros((0, 0))
        w, y = scipy.linalg.eigh(self.symmetrized)
        w = np.maximum(w, 0.0)
        vectors = y / np.sqrt(self.mass)[:, np.newaxis]
        for k in range(n):
            col = vectors[:, k]
            big = np.flatnonzero(np.abs(col) > tol.zero * np.max(np.abs(col)))
            if big.size and col[big[0]] < 0.0:
                vectors[:, k] = -col
        return w, vectors


def dtn_operator(graph, zero_set=None):
    """Build the DtN operator of graph, pinned to zero on zero_set.

    Raise DisconnectedGraphError for disconnected graphs, ParameterError if
    zero_set is not inside the interior, SingularInteriorError if the
    interior block of the stiffness matrix is singular.
    """
    require_connected(graph)
    zero_set = _zero_set(graph, zero_set)
    check_interior(graph, zero_set)

    L = stiffness_matrix(graph)
    b_idx = [graph.index(b) for b in graph.boundary_list]
    f_idx = [graph.index(v) for v in graph.interior_list if v not in zero_set]
    n, nb = len(graph), len(b_idx)
    extension = np.zeros((n, nb))
    extension[b_idx, np.arange(nb)] = 1.0
    schur = L[np.ix_(b_idx, b_idx)]
    if f_idx and nb:
        L_FB = L[np.ix_(f_idx, b_idx)]
        factor = scipy.linalg.cho_factor(L[np.ix_(f_idx, f_idx)])
        response = scipy.linalg.cho_solve(factor, L_FB)
        schur = schur - L_FB.T.dot(response)
        extension[f_idx, :] = -response
    schur = 0.5 * (schur + schur.T)
    log.debug(
        "DtN operator: |B|=%d, %d free interior vertices, |Z|=%d",
        nb,
        len(f_idx),
        len(zero_set),
    )
    mass = np.array([graph.m(b) for b in graph.boundary_list])
    return DtNOperator(graph, zero_set, schur, mass, extension)


def boundary_vector(graph, u):
    """Return boundary data as an array in graph.boundary_list order.

    u can be a VertexFunction or mapping covering the boundary, or a
    sequence of |B| values.
    """
    if isinstance(u, VertexFunction) or hasattr(u, "keys"):
        return np.array([u[b] for b in graph.boundary_list], dtype=float)
    arr = np.asarray(u, dtype=float).reshape(-1)
    if arr.shape[0] != len(graph.boundary):
        raise ValueError(
            "Expecting %d boundary values, got %d" % (len(graph.boundary), arr.shape[0])
        )
    return arr


def harmonic_extension(graph, u, zero_set=None):
    """Return the function equal to u on B, to 0 on zero_set and harmonic
    on the rest of the interior.

    Example:
    >>> from steklov.core.families import make_path
    >>> f = harmonic_extension(make_path(4), {'v0': 0.0, 'v4': 1.0})
    >>> [round(f[v], 12) for v in ('v1', 'v2', 'v3')]
    [0.25, 0.5, 0.75]
    """
    op = dtn_operator(graph, zero_set)
    return VertexFunction(graph.vertices, op.extend(boundary_vector(graph, u)))


def _spectrum_parts(op, tolerances):
    w, vectors = op.eigensystem(tolerances)
    extensions = op.extension.dot(vectors) if len(op) else np.zeros((len(op.graph), 0))
    return w, vectors, extensions


def steklov_spectrum(graph, tolerances=None):
    """Return the SteklovSpectrum of graph: |B| ascending eigenvalues with
    an eigenbasis orthonormal for the boundary inner product."""
    op = dtn_operator(graph)
    return SteklovSpectrum(graph, *_spectrum_parts(op, tolerances))


def dirichlet_steklov_spectrum(graph, zero_set, tolerances=None):
    """Return the spectrum of the DtN operator with vanishing Dirichlet data
    on zero_set. An empty boundary gives an empty spectrum."""
    zero_set = _zero_set(graph, zero_set)
    if not graph.boundary:
        require_connected(graph)
        return DirichletSteklovSpectrum(
            graph, zero_set, np.zeros(0), np.zeros((0, 0)), np.zeros((len(graph), 0))
        )
    op = dtn_operator(graph, zero_set)
    return DirichletSteklovSpectrum(graph, zero_set, *_spectrum_parts(op, tolerances))


def lambda1(graph, boundary=None, zero_set=(), tolerances=None):
    """Return lambda_1(G, B, Z); +infinity when B is empty.

    boundary replaces the boundary of graph when given.
    """
    if boundary is not None:
        graph = graph.with_boundary(boundary)
    if not graph.boundary:
        return math.inf
    return dirichlet_steklov_spectrum(graph, zero_set, tolerances).lambda1


def lambda1_eigenfunction(graph, boundary=None, zero_set=(), tolerances=None):
    """Return a nonnegative eigenfunction of lambda_1(G, B, Z) with unit
    boundary norm.

    If u is a first eigenvector then so is |u|, and the extension of
    nonnegative data pinned to zero on Z is nonnegative.
    """
    if boundary is not None:
        graph = graph.with_boundary(boundary)
    if not graph.boundary:
        raise ParameterError("An empty boundary has no eigenfunctions")
    op = dtn_operator(graph, zero_set)
    _, vectors = op.eigensystem(tolerances)
    return VertexFunction(graph.vertices, op.extend(np.abs(vectors[:, 0])))


def rayleigh_quotient(graph, u, zero_set=None):
    """Return <d zeta, d zeta>_G / <u, u>_B, zeta the extension of the
    boundary data u (pinned to zero on zero_set)."""
    op = dtn_operator(graph, zero_set)
    ub = boundary_vector(graph, u)
    denom = float(np.dot(ub * ub, op.mass))
    if denom == 0.0:
        raise ParameterError("The boundary data vanishes")
    f = op.extend(ub)
    return float(np.dot(f, stiffness_matrix(graph).dot(f))) / denom


def laplacian_spectrum(graph, eigenvectors=False):
    """Return the ascending eigenvalues of -Delta_G, the solutions of
    L_w phi = mu M phi; with eigenvectors=True also the M-orthonormal
    eigenvector columns."""
    L = stiffness_matrix(graph)
    M = np.diag(mass_vector(graph))
    if eigenvectors:
        w, v = scipy.linalg.eigh(L, M)
        return np.maximum(w, 0.0), v
    return np.maximum(scipy.linalg.eigh(L, M, eigvals_only=True), 0.0)


def _mean_zero_basis(mass, seed):
    """Return a random M_B-orthonormal basis of {u : <u, 1>_B = 0}."""
    n = mass.shape[0]
    rng = np.random.default_rng(seed)
    r = rng.standard_normal((n, n - 1))
    r -= np.outer(np.ones(n), mass.dot(r) / mass.sum())
    q, _ = np.linalg.qr(np.sqrt(mass)[:, np.newaxis] * r)
    return q / np.sqrt(mass)[:, np.newaxis]


def _require_two_boundary_vertices(graph, what):
    if len(graph.boundary) < 2:
        raise ParameterError("%s needs at least two boundary vertices" % what)


def zero_set_Z(graph, tolerances=None):
    """Return the interior vertices where every harmonic function with
    mean-zero boundary values vanishes.

    The set is computed from two random bases of the mean-zero boundary
    functions; ToleranceAmbiguityError is raised if they disagree.
    """
    tol = resolve(tolerances)
    _require_two_boundary_vertices(graph, "Z")
    op = dtn_operator(graph)
    interior = [(v, graph.index(v)) for v in graph.interior_list]
    found = []
    for seed in Z_BASIS_SEEDS:
        ext = op.extend(_mean_zero_basis(op.mass, seed))
        norms = np.linalg.norm(ext, axis=1)
        found.append(frozenset(v for (v, i) in interior if norms[i] < tol.zero))
    if found[0] != found[1]:
        raise ToleranceAmbiguityError(
            "Z differs between two bases: %s versus %s"
            % (sorted(found[0]), sorted(found[1]))
        )
    return found[0]


def zero_set_Z1(graph, tolerances=None):
    """Return the vertices where every sigma_2 eigenfunction vanishes."""
    tol = resolve(tolerances)
    _require_two_boundary_vertices(graph, "Z1")
    spectrum = steklov_spectrum(graph, tol)
    cols = [i - 1 for i in spectrum.eigenspace(2, tol)]
    norms = np.linalg.norm(spectrum.extensions[:, cols], axis=1)
    return frozenset(v for v in graph.vertices if norms[graph.index(v)] < tol.zero)


def constrained_pencil_eigenvalues(graph, zero_set=None):
    """Return the Dirichlet-Steklov eigenvalues from the full pencil.

    Solve K phi = lambda M_B phi over all vertices outside zero_set, K the
    stiffness matrix and M_B the boundary mass padded with zeros. The
    interior directions are infinite eigenvalues; the |B| finite ones are
    returned in ascending order. Only meant as an independent check of the
    Schur complement on small graphs.
    """
    zero_set = _zero_set(graph, zero_set)
    keep = [graph.index(v) for v in graph.vertices if v not in zero_set]
    K = stiffness_matrix(graph)[np.ix_(keep, keep)]
    mass = np.array(
        [graph.m(v) if v in graph.boundary else 0.0 for v in graph.vertices]
    )[keep]
    ab = scipy.linalg.eig(K, np.diag(mass), right=False, homogeneous_eigvals=True)
    alpha, beta = ab[0], ab[1]
    with np.errstate(divide="ignore", invalid="ignore"):
        values = np.abs(alpha / beta)
    values[~np.isfinite(values)] = np.inf
    return np.sort(values)[: len(graph.boundary)]


def _ids(graph, vertices):
    return sorted(vertices, key=graph.index)


def spectrum_report(graph, zero_set=None, tolerances=None):
    """Return the spectrum report of graph as an ordered dict.

    Keys: sigma (or lambda when a zero set is given), multiplicity_groups,
    Z, Z1, tolerances and note (several notes are joined by "; ").
    """
    tol = resolve(tolerances)
    out = OrderedDict()
    notes = []
    if zero_set:
        spectrum = dirichlet_steklov_spectrum(graph, zero_set, tol)
        out["lambda"] = spectrum.eigenvalues.tolist()
        out["zero_set"] = _ids(graph, spectrum.zero_set)
    else:
        spectrum = steklov_spectrum(graph, tol)
        out["sigma"] = spectrum.eigenvalues.tolist()
    out["multiplicity_groups"] = spectrum.multiplicity_groups(tol)
    if len(graph.boundary) >= 2:
        out["Z"] = _ids(graph, zero_set_Z(graph, tol))
        out["Z1"] = _ids(graph, zero_set_Z1(graph, tol))
    else:
        out["Z"], out["Z1"] = [], []
    out["tolerances"] = tol.as_dict()
    notes.append("sigma_i = +infinity for i >= %d" % (len(spectrum) + 1))
    lonely = isolated_boundary(graph)
    if lonely:
        log.warning(
            "Boundary vertices with only boundary neighbours: %s", _ids(graph, lonely)
        )
        notes.append(
            "boundary vertices with only boundary neighbours: %s"
            % ", ".join(_ids(graph, lonely))
        )
    out["note"] = "; ".join(notes)
    return out
