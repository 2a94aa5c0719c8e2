# -*- coding: utf-8 -*-

#    steklov - Steklov spectra of graphs with boundary, rigidity module.
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

"""Rigidity of Steklov monotonicity.

When does a comb extension keep the eigenvalues of its base? These
verifiers evaluate both sides of the known characterisations on concrete
pairs of graphs. Conditions that are only necessary are asserted only in
that direction; anything beyond it is recorded in the report data.

Residuals of equalities are -|difference|, so every residual at or above
-tolerance means the claim holds.

>>> from steklov.core.families import make_path
>>> r = verify_wedge_identity(make_path(2), 'v1')
>>> r.verdict, round(float(r.data['lambda1']), 10)
('pass', 1.0)
"""
from __future__ import absolute_import

import logging

import numpy as np
import scipy.linalg

from steklov.containers.report import VerdictReport
from steklov.core.combs import wedge_power, wedge_sum
from steklov.core.errors import WedgePointError
from steklov.core.operators import stiffness_matrix
from steklov.core.spectral import (
    dirichlet_steklov_spectrum,
    lambda1,
    steklov_spectrum,
    zero_set_Z,
    zero_set_Z1,
)
from steklov.core.tolerances import resolve
from steklov.theorems.monotonicity import check_comb_hypotheses

log = logging.getLogger(__name__)


def _ids(graph, vertices):
    return sorted(vertices, key=graph.index)


def _equal(a, b, tol):
    return abs(a - b) <= tol.comparison * max(1.0, abs(b))


def tooth_lambda1(decomp, z, tolerances=None):
    """Return lambda_1(tooth at z, its boundary minus z, {z})."""
    boundary = decomp.tooth_boundary(z) - frozenset([z])
    tooth = decomp.tooth_graph(z, boundary)
    return lambda1(tooth, zero_set=[z], tolerances=tolerances)


def condition_three(ambient, base, sigma):
    """Return the smallest eigenvalue of <du, du> - sigma <u, u>_B~ on the
    functions u constant on B with <u, 1>_B~ = 0.

    The form is restricted to an orthonormal basis of that subspace; the
    condition holds when the result is nonnegative. +infinity when the
    subspace is zero.
    """
    n = len(ambient)
    in_base = np.array([v in base.boundary for v in ambient.vertices])
    columns = [np.eye(n)[:, i] for i in range(n) if not in_base[i]]
    if in_base.any():
        columns.append(in_base / np.sqrt(in_base.sum()))
    C = np.column_stack(columns) if columns else np.zeros((n, 0))
    a = np.array(
        [ambient.m(v) if v in ambient.boundary else 0.0 for v in ambient.vertices]
    )
    N = scipy.linalg.null_space(a.dot(C)[np.newaxis, :])
    P = C.dot(N)
    if P.shape[1] == 0:
        return np.inf
    form = stiffness_matrix(ambient) - sigma * np.diag(a)
    Q = P.T.dot(form).dot(P)
    return float(scipy.linalg.eigvalsh(0.5 * (Q + Q.T))[0])


def _prepare(theorem, ambient, base, tol):
    report = VerdictReport(theorem, tol)
    decomp = check_comb_hypotheses(report, ambient, base)
    report.check("two-boundary-vertices", len(base.boundary) >= 2)
    return report, decomp


def _finish(report):
    report.conclude()
    log.info("%s", report)
    return report


def _equalities(report, lower, upper, count, tol):
    equal = True
    for i in range(1, count + 1):
        a, b = float(lower.sigma(i)), float(upper.sigma(i))
        report.residual("equality_%d" % i, -abs(b - a))
        equal = equal and _equal(a, b, tol)
    return equal


def verify_rigidity_full(ambient, base, tolerances=None):
    """Evaluate both sides of the characterisation of
    sigma_i(ambient) = sigma_i(base) for every i <= |B|.

    The right side is the conjunction of: (1) every boundary tooth
    boundary is {x}; (2) teeth at interior vertices outside Z carry no
    boundary; (3) <du, du> >= sigma_|B|(base) <u, u>_B~ for u constant on
    B with <u, 1>_B~ = 0. The report fails when the two sides disagree, or
    when Z is empty and the equalities disagree with B~ = B.
    """
    tol = resolve(tolerances)
    report, decomp = _prepare("rigidity", ambient, base, tol)
    if not report.hypotheses_hold:
        return _finish(report)

    upper, lower = steklov_spectrum(base, tol), steklov_spectrum(ambient, tol)
    n = len(base.boundary)
    lhs = _equalities(report, lower, upper, n, tol)

    Z = zero_set_Z(base, tol)
    sigma_top = float(upper.sigma(n))
    psd = condition_three(ambient, base, sigma_top)
    report.residual("condition_3", psd)
    conditions = {
        "1": all(decomp.tooth_boundary(x) == frozenset([x]) for x in base.boundary),
        "2": all(not decomp.tooth_boundary(y) for y in base.interior - Z),
        "3": psd >= -tol.comparison * max(1.0, sigma_top),
    }
    rhs = all(conditions.values())
    report.data["lhs"] = lhs
    report.data["rhs"] = rhs
    report.data["conditions"] = conditions
    report.data["Z"] = _ids(base, Z)
    if lhs != rhs:
        report.fail(
            "biconditional",
            {
                "lhs": lhs,
                "rhs": rhs,
                "conditions": conditions,
                "sigma_ambient": lower.eigenvalues.tolist(),
                "sigma_base": upper.eigenvalues.tolist(),
            },
        )
    if not Z:
        same_boundary = ambient.boundary == base.boundary
        report.data["same_boundary"] = same_boundary
        if lhs != same_boundary:
            report.fail(
                "empty-Z",
                {
                    "lhs": lhs,
                    "ambient_boundary": _ids(ambient, ambient.boundary),
                    "base_boundary": _ids(base, base.boundary),
                },
            )
    return _finish(report)


def verify_rigidity_geometric(ambient, base, tolerances=None):
    """If sigma_i(ambient) = sigma_i(base) for all i <= |B|, check
    lambda_1(tooth at z, its boundary minus z, {z}) >= sigma_|B|(base) at
    every z in Z.

    The bound is necessary only. When it holds at a nonempty Z while the
    equalities fail, data['converse_instance'] is set.
    """
    tol = resolve(tolerances)
    report, decomp = _prepare("rigidity-geometric", ambient, base, tol)
    report.data["converse_instance"] = False
    if not report.hypotheses_hold:
        return _finish(report)

    upper, lower = steklov_spectrum(base, tol), steklov_spectrum(ambient, tol)
    n = len(base.boundary)
    equal = _equalities(report, lower, upper, n, tol)
    Z = _ids(base, zero_set_Z(base, tol))
    sigma_top = float(upper.sigma(n))
    bounds = [(z, tooth_lambda1(decomp, z, tol)) for z in Z]
    holds = all(lam >= sigma_top - tol.comparison for (_, lam) in bounds)
    report.data["equalities"] = equal
    report.data["Z"] = Z
    report.data["sigma_top"] = sigma_top
    report.data["lambda1"] = dict(bounds)
    report.data["bound_holds"] = holds

    if equal:
        if not Z:
            report.note("Z is empty; the condition is vacuous")
        for z, lam in bounds:
            report.residual("lambda1_%s" % z, lam - sigma_top)
            if lam < sigma_top - tol.comparison:
                report.fail(
                    "lambda1_%s" % z, {"z": z, "lambda1": lam, "sigma_top": sigma_top}
                )
    else:
        report.note("the equalities fail; the condition is only necessary")
        if Z and holds:
            report.data["converse_instance"] = True
            report.note("the lambda_1 bound holds although the equalities fail")
    return _finish(report)


def verify_rigidity_sigma2(ambient, base, tolerances=None):
    """If sigma_2(ambient) = sigma_2(base) and Z1 lies in the interior,
    check: (1) B~_x = {x} for x in B; (2) B~_y is empty for interior
    y outside Z1; (3) lambda_1(tooth at z, boundary minus z, {z}) >=
    sigma_2(base) for z in Z1.

    Both sides are stored in data['lhs'] and data['rhs']; only lhs => rhs
    is asserted.
    """
    tol = resolve(tolerances)
    report, decomp = _prepare("rigidity-sigma2", ambient, base, tol)
    if report.hypotheses_hold:
        Z1 = zero_set_Z1(base, tol)
        report.check("Z1-interior", Z1 <= base.interior)
        report.data["Z1"] = _ids(base, Z1)
    if not report.hypotheses_hold:
        return _finish(report)

    s2 = float(steklov_spectrum(base, tol).sigma(2))
    s2t = float(steklov_spectrum(ambient, tol).sigma(2))
    lhs = _equal(s2t, s2, tol)
    report.residual("sigma_2", s2 - s2t)
    bounds = [(z, tooth_lambda1(decomp, z, tol)) for z in _ids(base, Z1)]
    conditions = {
        "1": all(decomp.tooth_boundary(x) == frozenset([x]) for x in base.boundary),
        "2": all(not decomp.tooth_boundary(y) for y in base.interior - Z1),
        "3": all(lam >= s2 - tol.comparison for (_, lam) in bounds),
    }
    rhs = all(conditions.values())
    report.data["sigma2_base"] = s2
    report.data["sigma2_ambient"] = s2t
    report.data["lambda1"] = dict(bounds)
    report.data["conditions"] = conditions
    report.data["lhs"] = lhs
    report.data["rhs"] = rhs
    if lhs:
        for name, ok in sorted(conditions.items()):
            if not ok:
                report.fail(
                    "condition_%s" % name,
                    {"sigma2": s2, "lambda1": dict(bounds), "Z1": report.data["Z1"]},
                )
    else:
        report.note("sigma_2 decreases strictly; the conditions are not implied")
    return _finish(report)


def spectrum_union_gap(g1, z1, g2, z2, tolerances=None):
    """Return the largest difference between the vanishing Dirichlet
    spectrum of g1 wedged with g2 at z and the union of the two spectra.

    Both graphs are pinned to zero at their wedge point.
    """
    glued = wedge_sum(g1, z1, g2, z2)
    joint = dirichlet_steklov_spectrum(glued, [z1], tolerances).eigenvalues
    parts = np.sort(
        np.concatenate(
            [
                dirichlet_steklov_spectrum(g1, [z1], tolerances).eigenvalues,
                dirichlet_steklov_spectrum(g2, [z2], tolerances).eigenvalues,
            ]
        )
    )
    if joint.shape != parts.shape:
        return np.inf
    return float(np.max(np.abs(joint - parts))) if joint.size else 0.0


def verify_symmetric_rigidity(gamma, z, r, tooth, tooth_root, tolerances=None):
    """Check sigma_2(G~) = sigma_2(G) <=> lambda_1(tooth, B_tooth, {root})
    >= sigma_2(G) for G the r-fold wedge of gamma at z and G~ = G with
    tooth glued at z by its root.

    Also checks the intermediate steps: lambda_1 of the wedge power equals
    lambda_1(gamma, boundary, {z}), which is at least sigma_2(G) and equals
    sigma_2 of the double wedge; the vanishing Dirichlet spectrum of G~
    is the union of those of G and the tooth.

    Raise WedgePointError if z is not interior in gamma or tooth_root is
    on the tooth's boundary.
    """
    tol = resolve(tolerances)
    if z not in gamma or z in gamma.boundary:
        raise WedgePointError("'%s' is not an interior vertex of gamma" % z)
    if tooth_root not in tooth or tooth_root in tooth.boundary:
        raise WedgePointError("'%s' is not an interior vertex of the tooth" % tooth_root)
    report = VerdictReport("rigidity-symmetric", tol)
    report.check("connected", gamma.is_connected() and tooth.is_connected())
    report.check("boundary", bool(gamma.boundary))
    report.check("r>=2", r >= 2)
    report.check("unit-weight", gamma.is_unit_weight() and tooth.is_unit_weight())
    if not report.hypotheses_hold:
        return _finish(report)

    G = wedge_power(gamma, z, r, unit_measure=True)
    Gt = wedge_sum(G, z, tooth, tooth_root, prefixes=("", "t:"), unit_measure=True)
    s2 = float(steklov_spectrum(G, tol).sigma(2))
    s2t = float(steklov_spectrum(Gt, tol).sigma(2))
    lam_tooth = lambda1(tooth, zero_set=[tooth_root], tolerances=tol)
    lhs = _equal(s2t, s2, tol)
    rhs = lam_tooth >= s2 - tol.comparison * max(1.0, s2)
    report.residual("sigma_2", s2 - s2t)
    report.residual("lambda1_tooth", lam_tooth - s2)
    report.data["sigma2_base"] = s2
    report.data["sigma2_ambient"] = s2t
    report.data["lambda1_tooth"] = lam_tooth
    report.data["lhs"] = lhs
    report.data["rhs"] = rhs
    if lhs != rhs:
        report.fail(
            "biconditional",
            {"sigma2_base": s2, "sigma2_ambient": s2t, "lambda1_tooth": lam_tooth},
        )

    lam_gamma = lambda1(gamma, zero_set=[z], tolerances=tol)
    lam_power = lambda1(G, zero_set=[z], tolerances=tol)
    double = float(steklov_spectrum(wedge_power(gamma, z, 2), tol).sigma(2))
    report.data["lambda1_gamma"] = lam_gamma
    if not _equal(lam_power, lam_gamma, tol):
        report.fail("wedge-power-lambda1", {"power": lam_power, "gamma": lam_gamma})
    if not _equal(double, lam_gamma, tol):
        report.fail("double-wedge", {"sigma2": double, "lambda1": lam_gamma})
    if s2 > lam_gamma + tol.comparison * max(1.0, lam_gamma):
        report.fail("sigma2-bound", {"sigma2": s2, "lambda1": lam_gamma})
    gap = spectrum_union_gap(G, z, tooth, tooth_root, tol)
    report.residual("spectrum_union", -gap)
    if gap > tol.comparison:
        report.fail("spectrum-union", {"gap": gap})
    return _finish(report)


def verify_wedge_identity(graph, z, tolerances=None):
    """Check that every sigma_2 eigenfunction of graph wedged with itself
    at z vanishes at z, and that sigma_2 of the wedge is
    lambda_1(graph, B, {z}).

    Raise WedgePointError if z is not an interior vertex.
    """
    tol = resolve(tolerances)
    if z not in graph or z in graph.boundary:
        raise WedgePointError("'%s' is not an interior vertex" % z)
    report = VerdictReport("wedge-identity", tol)
    report.check("connected", graph.is_connected())
    report.check("boundary", bool(graph.boundary))
    if not report.hypotheses_hold:
        return _finish(report)

    wedge = wedge_sum(graph, z, graph, z)
    spectrum = steklov_spectrum(wedge, tol)
    s2 = float(spectrum.sigma(2))
    lam = lambda1(graph, zero_set=[z], tolerances=tol)
    cols = [i - 1 for i in spectrum.eigenspace(2, tol)]
    at_z = float(np.max(np.abs(spectrum.extensions[wedge.index(z), cols])))
    report.residual("sigma2-lambda1", -abs(s2 - lam))
    report.residual("eigenfunction_at_z", -at_z)
    report.data["sigma2"] = s2
    report.data["lambda1"] = lam
    report.data["max_abs_f_z"] = at_z
    if abs(s2 - lam) > tol.comparison * max(1.0, lam):
        report.fail("sigma2-lambda1", {"sigma2": s2, "lambda1": lam})
    if at_z > tol.zero:
        report.fail("eigenfunction_at_z", {"z": z, "max_abs": at_z})
    return _finish(report)
