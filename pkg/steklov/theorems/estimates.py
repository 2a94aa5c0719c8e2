# -*- coding: utf-8 -*-

#    steklov - Steklov spectra of graphs with boundary, estimates module.
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

"""Eigenvalue estimates for graphs containing (or contained in) one of the
closed-form families.

verify_estimates(kind, params, graph, certificate) evaluates every
inequality of the estimate named by kind on the computed spectrum of
graph. Containment is never searched for: the caller supplies a
certificate mapping family vertex ids to graph vertex ids (for
'tree-ball-subtree' the other way round, graph ids to tree ball ids).
Without a certificate the identity map is used.

Kinds and params:

* regular-star {r, l}: sigma_i <= 1/l for i = 2, ..., r
* star {arms}: symmetric function bounds on 1/sigma_i and sigma_i,
  i = 2, ..., r, and sigma_2 <= r / sum(l)
* comb {r, l}: sigma_i <= 4s / (1 + 4ls), s = sin^2((i-1)pi/(2(r+1)))
* tree-ball {r, d}: sigma_j <= sigma-bar_k on the band of j
* tree-ball-subtree {r, d}: sigma_j >= sigma-bar_k on the band of j
* isodiametric {}: sigma_2 <= 2 / diam for trees
"""
from __future__ import absolute_import

import logging

from steklov.containers.report import VerdictReport
from steklov.core.combs import is_homotopy_faithful
from steklov.core.errors import CertificateError, ParameterError
from steklov.core.families import (
    StarSpec,
    comb_sigma_sine,
    elementary_symmetric,
    make_regular_comb,
    make_regular_star,
    make_star,
    make_tree_ball,
    star_Z,
    tree_ball_sigma,
)
from steklov.core.graphs import as_combinatorial, diameter, is_tree
from steklov.core.spectral import steklov_spectrum
from steklov.core.tolerances import resolve
from steklov.theorems.monotonicity import check_comb
from steklov.theorems.rigidity import (
    verify_rigidity_full,
    verify_rigidity_geometric,
    verify_rigidity_sigma2,
)

log = logging.getLogger(__name__)

KINDS = (
    "regular-star",
    "star",
    "comb",
    "tree-ball",
    "tree-ball-subtree",
    "isodiametric",
)


def validate_certificate(small, big, certificate=None):
    """Return the image of small inside big under certificate as a
    subgraph of big (combinatorial boundary of the image).

    Raise CertificateError unless certificate is an injective map of the
    vertices of small into those of big sending edges to edges.
    """
    if certificate is None:
        certificate = dict((v, v) for v in small.vertices)
    for v in small.vertices:
        if v not in certificate:
            raise CertificateError("Vertex '%s' is not mapped" % v)
        if certificate[v] not in big:
            raise CertificateError(
                "Vertex '%s' is mapped to the unknown vertex '%s'" % (v, certificate[v])
            )
    images = [certificate[v] for v in small.vertices]
    if len(set(images)) != len(images):
        raise CertificateError("The certificate is not injective")
    for (u, v) in small.edges:
        if not big.has_edge(certificate[u], certificate[v]):
            raise CertificateError(
                "Edge %s-%s is not mapped to an edge" % (u, v)
            )
    image = big.subgraph(images)
    return as_combinatorial(image)


def band(d, j):
    """Return k with d(d-1)^(k-3) < j <= d(d-1)^(k-2), for j >= 2.

    >>> [band(3, j) for j in (2, 3, 4, 6, 7)]
    [2, 2, 3, 3, 4]
    """
    k = 2
    while j > d * (d - 1) ** (k - 2):
        k += 1
    return k


def _param(params, name):
    if name not in params:
        raise ParameterError("Missing parameter '%s'" % name)
    return params[name]


def _family(kind, params):
    if kind == "regular-star":
        return make_regular_star(_param(params, "r"), _param(params, "l"))
    if kind == "star":
        return make_star(_param(params, "arms"))
    if kind == "comb":
        return make_regular_comb(_param(params, "r"), _param(params, "l"))
    return make_tree_ball(_param(params, "r"), _param(params, "d"))


def _bound(report, name, slack, tol, witness):
    report.residual(name, slack)
    if slack < -tol.comparison:
        report.fail(name, witness)


def _tight(slack, scale, tol):
    return abs(slack) <= tol.comparison * max(1.0, abs(scale))


def verify_estimates(kind, params, graph, certificate=None, tolerances=None):
    """Evaluate the estimate named by kind on graph; see the module
    documentation for the kinds.

    graph is taken as a combinatorial graph (unit weight, boundary
    {deg <= 1}). For containing estimates the hypotheses are that graph is
    a comb over the certified family image and every tooth is a tree.
    Where an estimate is tight the matching rigidity verifier runs and its
    report is attached.

    Raise CertificateError for a bad certificate and ParameterError for an
    unknown kind or missing parameters.
    """
    if kind not in KINDS:
        raise ParameterError("Unknown estimate '%s'" % kind)
    tol = resolve(tolerances)
    params = dict(params or {})
    graph = as_combinatorial(graph)
    report = VerdictReport("estimate:%s" % kind, tol)
    report.data["params"] = params

    if kind == "isodiametric":
        _isodiametric(report, graph, tol)
    elif kind == "tree-ball-subtree":
        _tree_ball_subtree(report, graph, params, certificate, tol)
    else:
        family = _family(kind, params)
        base = validate_certificate(family, graph, certificate)
        decomp = check_comb(report, graph, base)
        report.check(
            "homotopy-faithful",
            decomp is not None and is_homotopy_faithful(graph, base),
        )
        report.check(
            "measure",
            decomp is not None
            and all(decomp.tooth_measure(x) >= 1.0 for x in base.boundary),
        )
        if report.hypotheses_hold:
            spectrum = steklov_spectrum(graph, tol)
            report.data["sigma"] = spectrum.eigenvalues.tolist()
            check = {
                "regular-star": _regular_star,
                "star": _star,
                "comb": _comb,
                "tree-ball": _tree_ball,
            }[kind]
            check(report, graph, base, spectrum, params, tol)

    report.conclude()
    log.info("%s: min slack %r", report, report.min_residual())
    return report


def _regular_star(report, graph, base, spectrum, params, tol):
    r, l = params["r"], params["l"]
    for i in range(2, r + 1):
        s = float(spectrum.sigma(i))
        _bound(report, "sigma_%d" % i, 1.0 / l - s, tol, {"index": i, "sigma": s})
    if _tight(1.0 / l - float(spectrum.sigma(2)), 1.0 / l, tol):
        report.attach(verify_rigidity_sigma2(graph, base, tol))


def _star(report, graph, base, spectrum, params, tol):
    spec = StarSpec(params["arms"])
    r, lengths = spec.r, list(spec.arm_lengths)
    sigma = [float(spectrum.sigma(i)) for i in range(2, r + 1)]
    p_len = elementary_symmetric(lengths)
    p_inv = elementary_symmetric([1.0 / s for s in sigma])
    p_sig = elementary_symmetric(sigma)
    tight = False
    for k in range(1, r):
        rhs = (r - k) / float(r) * p_len[k]
        slack = p_inv[k] - rhs
        _bound(report, "inverse_p%d" % k, slack, tol, {"k": k, "lhs": p_inv[k], "rhs": rhs})
        tight = tight or _tight(slack, rhs, tol)
        rhs = (k + 1) * p_len[r - k - 1] / float(p_len[r - 1])
        slack = rhs - p_sig[k]
        _bound(report, "p%d" % k, slack, tol, {"k": k, "lhs": p_sig[k], "rhs": rhs})
        tight = tight or _tight(slack, rhs, tol)
    rhs = r / float(spec.total_length)
    slack = rhs - sigma[0]
    _bound(report, "sigma_2", slack, tol, {"sigma": sigma[0], "rhs": rhs})

    if tight:
        Z, d = star_Z(spec)
        report.data["Z"] = sorted(Z)
        if d == 0:
            report.note("d = 0: Z is the center")
        if not Z:
            report.attach(verify_rigidity_full(graph, base, tol))
            if graph != base:
                report.fail("equals-star", {"ambient_vertices": len(graph)})
        else:
            report.attach(verify_rigidity_geometric(graph, base, tol))
    if r >= 3 and _tight(slack, rhs, tol):
        if not spec.is_regular():
            report.fail("regular-arms", {"arms": lengths})
        report.attach(verify_rigidity_sigma2(graph, base, tol))


def _comb(report, graph, base, spectrum, params, tol):
    r, l = params["r"], params["l"]
    tight = True
    for i in range(1, r + 2):
        bound = comb_sigma_sine(r, l, i)
        s = float(spectrum.sigma(i))
        _bound(report, "sigma_%d" % i, bound - s, tol, {"index": i, "sigma": s, "bound": bound})
        tight = tight and _tight(bound - s, bound, tol)
    if tight:
        report.attach(verify_rigidity_full(graph, base, tol))
        if graph != base:
            report.fail("equals-comb", {"ambient_vertices": len(graph)})


def _tree_ball(report, graph, base, spectrum, params, tol):
    r, d = params["r"], params["d"]
    for j in range(2, d * (d - 1) ** (r - 1) + 1):
        k = band(d, j)
        bound = tree_ball_sigma(r, d, k)
        s = float(spectrum.sigma(j))
        _bound(report, "sigma_%d" % j, bound - s, tol, {"index": j, "sigma": s, "bound": bound})
    bound = tree_ball_sigma(r, d, 2)
    if _tight(bound - float(spectrum.sigma(2)), bound, tol):
        report.attach(verify_rigidity_sigma2(graph, base, tol))


def _tree_ball_subtree(report, graph, params, certificate, tol):
    r, d = _param(params, "r"), _param(params, "d")
    ball = make_tree_ball(r, d)
    validate_certificate(graph, ball, certificate)
    report.check("tree", is_tree(graph) and len(graph) >= 2)
    if not report.hypotheses_hold:
        return
    spectrum = steklov_spectrum(graph, tol)
    report.data["sigma"] = spectrum.eigenvalues.tolist()
    for j in range(2, len(spectrum) + 1):
        k = band(d, j)
        if k > r + 1:
            break
        bound = tree_ball_sigma(r, d, k)
        s = float(spectrum.sigma(j))
        _bound(report, "sigma_%d" % j, s - bound, tol, {"index": j, "sigma": s, "bound": bound})


def _isodiametric(report, graph, tol):
    report.check("tree", is_tree(graph) and len(graph) >= 2)
    if not report.hypotheses_hold:
        return
    diam = diameter(graph)
    s2 = float(steklov_spectrum(graph, tol).sigma(2))
    report.data["diameter"] = diam
    report.data["sigma_2"] = s2
    _bound(report, "sigma_2", 2.0 / diam - s2, tol, {"sigma": s2, "diameter": diam})
