# -*- coding: utf-8 -*-

#    steklov - Steklov spectra of graphs with boundary, monotonicity module.
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

"""Monotonicity of Steklov eigenvalues under comb extensions.

If the ambient graph is a comb over a connected base graph, carries the
base's measure and weights, and every tooth at a boundary vertex x holds
boundary measure at least m_x, then sigma_i(ambient) <= sigma_i(base) for
i = 1, ..., |B|.

>>> from steklov.core.families import make_regular_star
>>> r = verify_monotonicity(make_regular_star(3, 2), make_regular_star(3, 1))
>>> r.verdict
'pass'
>>> [round(s, 12) for s in r.data['sigma_ambient']]
[0.0, 0.5, 0.5]
"""
from __future__ import absolute_import

import logging

from steklov.containers.report import VerdictReport
from steklov.core.combs import comb_decompose, is_homotopy_faithful
from steklov.core.errors import NotACombError, NotASubgraphError
from steklov.core.graphs import (
    as_combinatorial,
    inherits_weights,
    is_subgraph,
    isolated_boundary,
)
from steklov.core.spectral import steklov_spectrum
from steklov.core.tolerances import resolve

log = logging.getLogger(__name__)


def check_comb(report, ambient, base):
    """Record the 'connected' and 'comb' hypotheses; return the
    ToothDecomposition or None."""
    connected = report.check(
        "connected", ambient.is_connected() and base.is_connected()
    )
    decomp = None
    if connected:
        try:
            decomp = comb_decompose(ambient, base)
        except (NotACombError, NotASubgraphError) as exc:
            report.note(str(exc))
    report.check("comb", decomp is not None)
    return decomp


def check_comb_hypotheses(report, ambient, base, weights_from_ambient=True):
    """Record every hypothesis of the monotonicity theorem on report and
    return the ToothDecomposition (None when there is no comb)."""
    decomp = check_comb(report, ambient, base)
    if weights_from_ambient:
        report.check(
            "inherits-weights",
            is_subgraph(base, ambient) and inherits_weights(base, ambient),
        )
    else:
        report.note("base weights are not compared with the ambient graph")
    report.check(
        "measure",
        decomp is not None
        and all(decomp.tooth_measure(x) >= base.m(x) for x in base.boundary),
    )
    for name, graph in (("ambient", ambient), ("base", base)):
        lonely = isolated_boundary(graph)
        if lonely:
            log.warning(
                "%s graph: boundary vertices with only boundary neighbours %s",
                name,
                sorted(lonely),
            )
            report.note(
                "%s graph has boundary vertices with only boundary neighbours: %s"
                % (name, ", ".join(sorted(lonely)))
            )
    return decomp


def compare_spectra(report, ambient, base, tolerances):
    """Record sigma_i(base) - sigma_i(ambient) for i = 1, ..., |B| and fail
    on every index below -tolerance."""
    if not base.boundary:
        report.note("the base boundary is empty; every sigma_i(base) is +infinity")
        return None, None
    upper = steklov_spectrum(base, tolerances)
    lower = steklov_spectrum(ambient, tolerances)
    report.data["sigma_ambient"] = lower.eigenvalues.tolist()
    report.data["sigma_base"] = upper.eigenvalues.tolist()
    for i in range(1, len(upper) + 1):
        slack = float(upper.sigma(i)) - float(lower.sigma(i))
        report.residual("sigma_%d" % i, slack)
        if slack < -tolerances.comparison:
            report.fail(
                "sigma_%d" % i,
                {
                    "index": i,
                    "sigma_ambient": float(lower.sigma(i)),
                    "sigma_base": float(upper.sigma(i)),
                },
            )
    return lower, upper


def verify_monotonicity(ambient, base, tolerances=None, weights_from_ambient=True):
    """Check sigma_i(ambient) <= sigma_i(base) for i = 1, ..., |B|.

    The hypotheses (both graphs connected, ambient a comb over base, base
    weights inherited, m(B_x) >= m_x on every boundary tooth) are checked
    and recorded; the spectra are only compared when all of them hold.
    weights_from_ambient=False skips the inherited weights check, which
    lets a caller compare a base with deliberately different weights.
    """
    tol = resolve(tolerances)
    report = VerdictReport("monotonicity", tol)
    check_comb_hypotheses(report, ambient, base, weights_from_ambient)
    if report.hypotheses_hold:
        compare_spectra(report, ambient, base, tol)
    report.conclude()
    log.info("%s: min slack %r", report, report.min_residual())
    return report


def verify_monotonicity_homotopy(ambient, base, tolerances=None):
    """Check monotonicity for combinatorial graphs over a homotopy
    faithful subgraph.

    Both graphs are taken with unit weight and boundary {deg <= 1}; the
    hypothesis is that every tooth is a tree, so all cycles of the ambient
    graph lie in the base.
    """
    tol = resolve(tolerances)
    ambient, base = as_combinatorial(ambient), as_combinatorial(base)
    report = VerdictReport("monotonicity-homotopy", tol)
    decomp = check_comb(report, ambient, base)
    report.check(
        "homotopy-faithful",
        decomp is not None and is_homotopy_faithful(ambient, base),
    )
    report.check(
        "measure",
        decomp is not None
        and all(decomp.tooth_measure(x) >= base.m(x) for x in base.boundary),
    )
    if report.hypotheses_hold:
        compare_spectra(report, ambient, base, tol)
    report.conclude()
    log.info("%s: min slack %r", report, report.min_residual())
    return report
