# -*- coding: utf-8 -*-

#    steklov - Steklov spectra of graphs with boundary, families module.
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

"""Graph families with closed-form Steklov spectra.

Every constructor returns a graph with unit weight and combinatorial
boundary (the vertices of degree at most one). Vertex names are stable:

* path of length l: v0, ..., vl
* star: center o, vertex k of arm j is a{j}.{k} (arms sorted by length)
* regular comb: base b0, ..., br; vertex j of the tooth at bk is t{k}.{j}
* tree ball: root o; its children o.0, ..., o.{d-1}; the children of any
  other vertex x are x.0, ..., x.{d-2}

The eigenfunction builders return (sigma, VertexFunction) pairs.

>>> star_char_polynomial([1, 2, 3])
[3, -12, 11]
>>> star_spectrum([1, 1, 4]).sigma == [0.0, 1 / 3.0, 1.0]
True
>>> [round(s, 12) for s in regular_comb_spectrum(2, 1).sigma]
[0.0, 0.5, 0.75]
"""
from __future__ import absolute_import

import logging
import math
from collections import Counter

import numpy as np
import scipy.linalg

from steklov.containers.functions import VertexFunction
from steklov.containers.graph import WeightedBoundaryGraph
from steklov.containers.spectrum import ClosedFormSpectrum
from steklov.core.errors import ParameterError, RootFindingError
from steklov.core.graphs import combinatorial_boundary
from steklov.core.operators import (
    as_vector,
    inner_product,
    laplacian_apply,
    normal_derivative,
)

log = logging.getLogger(__name__)

# Imaginary part and interval slack accepted for star polynomial roots.
ROOT_ATOL = 1e-9

# |P(t)| at a root, relative to the coefficient and argument scale.
ROOT_RESIDUAL = 1e-8


def _positive_int(name, value, minimum=1):
    if isinstance(value, bool) or int(value) != value or value < minimum:
        raise ParameterError("Expecting an integer %s >= %d, got %r" % (name, minimum, value))
    return int(value)


def _unit_graph(vertices, edges):
    g = WeightedBoundaryGraph(vertices, [(u, v, 1.0) for (u, v) in edges], {}, ())
    return g.with_boundary(combinatorial_boundary(g))


def make_path(l):
    """Return the path v0 - v1 - ... - vl with boundary {v0, vl}."""
    l = _positive_int("l", l)
    vertices = ["v%d" % k for k in range(l + 1)]
    return _unit_graph(vertices, zip(vertices, vertices[1:]))


class StarSpec(object):

    """Sorted arm lengths l_1 <= ... <= l_r of a star, r >= 2.

    >>> StarSpec([3, 1, 2]).arm_lengths
    (1, 2, 3)
    """

    __slots__ = ("arm_lengths",)

    def __init__(self, arm_lengths):
        lengths = [_positive_int("arm length", l) for l in arm_lengths]
        if len(lengths) < 2:
            raise ParameterError("A star needs at least two arms, got %d" % len(lengths))
        self.arm_lengths = tuple(sorted(lengths))

    @classmethod
    def of(cls, spec):
        return spec if isinstance(spec, cls) else cls(spec)

    @property
    def r(self):
        return len(self.arm_lengths)

    @property
    def total_length(self):
        return sum(self.arm_lengths)

    def is_regular(self):
        return len(set(self.arm_lengths)) == 1

    def __eq__(self, other):
        return isinstance(other, StarSpec) and self.arm_lengths == other.arm_lengths

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.arm_lengths)

    def __repr__(self):
        return "StarSpec(%r)" % (list(self.arm_lengths),)


def star_vertex(j, k):
    """Return the name of vertex k on arm j; k = 0 is the center."""
    return "o" if k == 0 else "a%d.%d" % (j, k)


def make_star(spec):
    """Return St(l_1, ..., l_r): r paths glued at the center o."""
    spec = StarSpec.of(spec)
    vertices = ["o"]
    edges = []
    for j, l in enumerate(spec.arm_lengths, 1):
        for k in range(1, l + 1):
            vertices.append(star_vertex(j, k))
            edges.append((star_vertex(j, k - 1), star_vertex(j, k)))
    return _unit_graph(vertices, edges)


def make_regular_star(r, l):
    """Return St(r; l), r arms of length l."""
    r = _positive_int("r", r, 2)
    return make_star([l] * r)


def make_regular_comb(r, l):
    """Return Comb(r; l): the path b0 - ... - br with a pendant path of
    length l at every base vertex."""
    r, l = _positive_int("r", r), _positive_int("l", l)
    vertices = ["b%d" % k for k in range(r + 1)]
    edges = [("b%d" % k, "b%d" % (k + 1)) for k in range(r)]
    for k in range(r + 1):
        prev = "b%d" % k
        for j in range(1, l + 1):
            name = "t%d.%d" % (k, j)
            vertices.append(name)
            edges.append((prev, name))
            prev = name
    return _unit_graph(vertices, edges)


def _tree_ball_layout(r, d):
    """Return (vertices in BFS order, children, depth) of T(r, d)."""
    vertices, children, depth = ["o"], {}, {"o": 0}
    frontier = ["o"]
    for level in range(1, r + 1):
        nxt = []
        for x in frontier:
            count = d if x == "o" else d - 1
            children[x] = ["%s.%d" % (x, i) for i in range(count)]
            for y in children[x]:
                depth[y] = level
            nxt.extend(children[x])
        vertices.extend(nxt)
        frontier = nxt
    for x in frontier:
        children[x] = []
    return vertices, children, depth


def make_tree_ball(r, d):
    """Return T(r, d), the ball of radius r about o in the d-regular tree."""
    r, d = _positive_int("r", r), _positive_int("d", d, 3)
    vertices, children, _ = _tree_ball_layout(r, d)
    edges = [(x, y) for x in vertices for y in children[x]]
    return _unit_graph(vertices, edges)


def elementary_symmetric(values):
    """Return [p_0, p_1, ..., p_n] of the given numbers.

    >>> elementary_symmetric([1, 2, 3])
    [1, 6, 11, 6]
    """
    p = [1] + [0] * len(values)
    for x in values:
        for k in range(len(p) - 1, 0, -1):
            p[k] += p[k - 1] * x
    return p


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _product_of_factors(roots):
    """Return the coefficients (highest power first) of prod (t - a)."""
    out = [1]
    for a in roots:
        out = _poly_mul(out, [1, -a])
    return out


def _product_sum_form(lengths):
    r = len(lengths)
    total = [0] * r
    for i in range(r):
        term = _product_of_factors(lengths[:i] + lengths[i + 1:])
        total = [x + y for (x, y) in zip(total, term)]
    return total


def _symmetric_form(lengths):
    r = len(lengths)
    p = elementary_symmetric(lengths)
    # coefficient of t^i is (-1)^(r-i-1) (i+1) p_(r-i-1)
    return [
        (-1) ** (r - i - 1) * (i + 1) * p[r - i - 1] for i in range(r - 1, -1, -1)
    ]


def star_char_polynomial(spec):
    """Return the integer coefficients of P(t), highest power first.

    P(t) = sum_i prod_{j != i} (t - l_j); its roots are 1/sigma_2, ...,
    1/sigma_r of the star. Both the product-sum and the elementary
    symmetric expansion are computed and must agree.
    """
    lengths = list(StarSpec.of(spec).arm_lengths)
    coefficients = _product_sum_form(lengths)
    if coefficients != _symmetric_form(lengths):
        raise RootFindingError(
            "The two expansions of P disagree for arms %s" % lengths
        )
    return coefficients


def _companion_roots(coefficients):
    if len(coefficients) < 2:
        return np.zeros(0)
    return scipy.linalg.eigvals(scipy.linalg.companion(coefficients))


def star_roots(spec):
    """Return the r - 1 roots of P(t) in ascending order.

    Each arm length a of multiplicity m is a root of multiplicity m - 1.
    The remaining roots are the simple roots of
    sum_a m_a prod_{b != a} (t - b) over the distinct lengths, found as
    eigenvalues of its companion matrix. Raise RootFindingError if a root
    is not real, leaves [l_1, l_r], or P does not vanish there.
    """
    spec = StarSpec.of(spec)
    counts = Counter(spec.arm_lengths)
    distinct = sorted(counts)
    roots = []
    for a in distinct:
        roots.extend([float(a)] * (counts[a] - 1))
    deflated = [0] * len(distinct)
    for a in distinct:
        term = _product_of_factors([b for b in distinct if b != a])
        deflated = [x + counts[a] * y for (x, y) in zip(deflated, term)]
    for t in _companion_roots(deflated):
        if abs(t.imag) > ROOT_ATOL * max(1.0, abs(t.real)):
            raise RootFindingError("P has the complex root %r" % t)
        roots.append(float(t.real))
    roots.sort()

    coefficients = star_char_polynomial(spec)
    lo, hi = spec.arm_lengths[0], spec.arm_lengths[-1]
    scale = max(abs(c) for c in coefficients)
    for t in roots:
        if not lo - ROOT_ATOL <= t <= hi + ROOT_ATOL:
            raise RootFindingError("Root %r lies outside [%d, %d]" % (t, lo, hi))
        value = np.polyval(np.array(coefficients, dtype=float), t)
        if abs(value) > ROOT_RESIDUAL * scale * max(1.0, abs(t)) ** (spec.r - 1):
            raise RootFindingError("P(%r) = %r is not zero" % (t, value))
    log.debug("star %s: roots %s", list(spec.arm_lengths), roots)
    return roots


def star_spectrum(spec, tolerances=None):
    """Return the Steklov spectrum of St(l_1, ..., l_r): 0 and the
    reciprocals of the roots of P."""
    spec = StarSpec.of(spec)
    sigma = [0.0] + [1.0 / t for t in star_roots(spec)]
    return ClosedFormSpectrum.from_list(
        "star", {"arms": list(spec.arm_lengths)}, sigma, tolerances
    )


def star_Z(spec):
    """Return (Z, d) for the star, or (frozenset(), None).

    Z is nonempty exactly when l_1 = ... = l_(r-1) and l_r = r d + l_1 for
    an integer d >= 0; it is then the vertex of arm r at distance d from
    the center (the center itself for d = 0).

    >>> star_Z([1, 1, 4])
    (frozenset({'a3.1'}), 1)
    >>> star_Z([1, 2, 3])
    (frozenset(), None)
    """
    spec = StarSpec.of(spec)
    lengths = spec.arm_lengths
    first, last = lengths[0], lengths[-1]
    if len(set(lengths[:-1])) != 1 or (last - first) % spec.r:
        return frozenset(), None
    d = (last - first) // spec.r
    if d == 0:
        log.warning("star %s has d = 0: Z is the center", list(lengths))
    return frozenset([star_vertex(spec.r, d)]), d


def path_spectrum(l):
    """Return {0, 2/l}, the Steklov spectrum of the path of length l."""
    l = _positive_int("l", l)
    return ClosedFormSpectrum("path", {"l": l}, [0.0, 2.0 / l], [1, 1])


def regular_star_spectrum(r, l):
    """Return {0} and 1/l with multiplicity r - 1."""
    r, l = _positive_int("r", r, 2), _positive_int("l", l)
    return ClosedFormSpectrum("regular-star", {"r": r, "l": l}, [0.0, 1.0 / l], [1, r - 1])


def regular_star_eigenfunctions(r, l):
    """Return the pairs (1/l, f_j), j = 2, ..., r, on St(r; l).

    f_j is k/l at vertex k of arm 1, -k/l at vertex k of arm j and 0
    elsewhere.
    """
    g = make_regular_star(r, l)
    pairs = []
    for j in range(2, r + 1):
        values = dict((v, 0.0) for v in g.vertices)
        for k in range(1, l + 1):
            values[star_vertex(1, k)] = k / float(l)
            values[star_vertex(j, k)] = -k / float(l)
        pairs.append((1.0 / l, VertexFunction(g.vertices, values)))
    return pairs


def path_laplacian_eigen(r):
    """Return (mu, phi) for the path of length r with unit weight.

    mu[i-1] = 2 - 2 cos((i-1) pi / (r+1)) and phi[i-1][k] =
    cos((i-1)(2k+1) pi / (2(r+1))), i = 1, ..., r+1, k = 0, ..., r.
    """
    n = r + 1
    mu = [2.0 - 2.0 * math.cos(i * math.pi / n) for i in range(n)]
    phi = [
        [math.cos(i * (2 * k + 1) * math.pi / (2 * n)) for k in range(n)]
        for i in range(n)
    ]
    return mu, phi


def comb_sigma(r, l, i):
    """Return mu_i / (1 + mu_i l), the i-th eigenvalue of Comb(r; l)."""
    mu = 2.0 - 2.0 * math.cos((i - 1) * math.pi / (r + 1))
    return mu / (1.0 + mu * l)


def comb_sigma_sine(r, l, i):
    """Return the same eigenvalue as 4 s / (1 + 4 l s),
    s = sin^2((i-1) pi / (2(r+1)))."""
    s = math.sin((i - 1) * math.pi / (2 * (r + 1))) ** 2
    return 4.0 * s / (1.0 + 4.0 * l * s)


def regular_comb_spectrum(r, l, tolerances=None):
    r, l = _positive_int("r", r), _positive_int("l", l)
    sigma = [comb_sigma(r, l, i) for i in range(1, r + 2)]
    return ClosedFormSpectrum.from_list("comb", {"r": r, "l": l}, sigma, tolerances)


def comb_eigenfunctions(r, l):
    """Return the pairs (sigma_i, f_i), i = 1, ..., r+1, on Comb(r; l).

    f_i is phi_i(k) (1 + j mu_i) at vertex j of the tooth at b_k (j = 0
    being b_k itself).
    """
    g = make_regular_comb(r, l)
    mu, phi = path_laplacian_eigen(r)
    pairs = []
    for i in range(r + 1):
        values = {}
        for k in range(r + 1):
            values["b%d" % k] = phi[i][k]
            for j in range(1, l + 1):
                values["t%d.%d" % (k, j)] = phi[i][k] * (1.0 + j * mu[i])
        pairs.append((mu[i] / (1.0 + mu[i] * l), VertexFunction(g.vertices, values)))
    return pairs


def tree_ball_sigma(r, d, k):
    """Return the k-th distinct eigenvalue of T(r, d), k = 1, ..., r+1."""
    if k == 1:
        return 0.0
    return (d - 2) / float((d - 1) ** (r + 2 - k) - 1)


def tree_ball_multiplicity(d, k):
    if k == 1:
        return 1
    if k == 2:
        return d - 1
    return (d - 2) * d * (d - 1) ** (k - 3)


def tree_ball_spectrum(r, d):
    """Return the r+1 distinct eigenvalues of T(r, d) with multiplicities.

    >>> tree_ball_spectrum(2, 3).sigma == [0.0, 1 / 3.0, 1 / 3.0, 1.0, 1.0, 1.0]
    True
    """
    r, d = _positive_int("r", r), _positive_int("d", d, 3)
    ks = range(1, r + 2)
    return ClosedFormSpectrum(
        "tree-ball",
        {"r": r, "d": d},
        [tree_ball_sigma(r, d, k) for k in ks],
        [tree_ball_multiplicity(d, k) for k in ks],
    )


def _descendants_by_depth(children, y):
    """Yield (j, x) for x in the subtree of y at relative depth j."""
    level, j = [y], 0
    while level:
        for x in level:
            yield j, x
        level = [c for x in level for c in children[x]]
        j += 1


def tree_ball_eigenfunctions(r, d):
    """Return generators (sigma_k, f) of every eigenspace k >= 2 of T(r, d).

    For a vertex p at depth k-2 with children y_1 and y_a (a != 1), f is
    S_j / S at depth j below y_1, -S_j / S at depth j below y_a and 0
    elsewhere, where q = d-1, R = r+1-k, S_j = q^(R-j) + ... + q^R and
    S = 1 + q + ... + q^R. Sums are exact integers.
    """
    r, d = _positive_int("r", r), _positive_int("d", d, 3)
    vertices, children, depth = _tree_ball_layout(r, d)
    q = d - 1
    pairs = []
    for k in range(2, r + 2):
        R = r + 1 - k
        S = sum(q ** i for i in range(R + 1))
        level = dict((j, sum(q ** i for i in range(R - j, R + 1))) for j in range(R + 1))
        sigma = tree_ball_sigma(r, d, k)
        for p in [x for x in vertices if depth[x] == k - 2]:
            first = children[p][0]
            for other in children[p][1:]:
                values = dict((v, 0.0) for v in vertices)
                for j, x in _descendants_by_depth(children, first):
                    values[x] = level[j] / float(S)
                for j, x in _descendants_by_depth(children, other):
                    values[x] = -level[j] / float(S)
                pairs.append((sigma, VertexFunction(vertices, values)))
    return pairs


def eigenfunction_residuals(graph, sigma, f):
    """Return (max interior |Delta f|, max boundary |df/dn - sigma f|) for
    f scaled to unit boundary norm."""
    x = as_vector(graph, f)
    norm = math.sqrt(inner_product(graph, x, x, graph.boundary))
    if norm == 0.0:
        raise ParameterError("The function vanishes on the boundary")
    f = VertexFunction(graph.vertices, x / norm)
    lap = laplacian_apply(graph, f)
    interior = max([abs(lap[v]) for v in graph.interior_list] or [0.0])
    boundary = max(
        [abs(normal_derivative(graph, f, b) - sigma * f[b]) for b in graph.boundary_list]
        or [0.0]
    )
    return interior, boundary
