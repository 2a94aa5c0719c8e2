# -*- coding: utf-8 -*-

#    steklov - Steklov spectra of graphs with boundary, report module.
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

"""The VerdictReport container.

Every theorem verifier returns one of these instead of raising. A report
collects named hypothesis checks, named numeric residuals (positive means
the inequality holds with room to spare), witnesses backing failures, free
form notes and extra data, and ends with one of three verdicts.
"""
from __future__ import absolute_import

import math
from collections import OrderedDict

PASS = "pass"
FAIL = "fail"
HYPOTHESIS_NOT_MET = "hypothesis-not-met"


class VerdictReport(object):

    """Structured outcome of a theorem verifier.

    >>> r = VerdictReport('demo')
    >>> r.check('connected', True)
    True
    >>> r.residual('sigma_2', 0.25)
    >>> r.conclude()
    'pass'
    >>> r.as_dict()['residuals']
    [{'name': 'sigma_2', 'slack': 0.25}]
    """

    def __init__(self, theorem, tolerances=None):
        self.theorem = theorem
        self.hypotheses = OrderedDict()
        self.residuals = []
        self.witness = None
        self.notes = []
        self.data = OrderedDict()
        self.subreports = []
        self.tolerances = tolerances
        self.verdict = None
        self._failures = []

    def check(self, name, passed):
        """Record a hypothesis check and return its outcome."""
        self.hypotheses[name] = bool(passed)
        return bool(passed)

    @property
    def hypotheses_hold(self):
        return all(self.hypotheses.values())

    def residual(self, name, slack):
        """Record a conclusion residual; only allowed while every hypothesis
        holds."""
        if not self.hypotheses_hold:
            raise ValueError("Residuals are only recorded when hypotheses hold")
        self.residuals.append((name, float(slack)))

    def fail(self, reason, witness):
        """Record a failed conclusion together with the witness backing it."""
        if witness is None:
            raise ValueError("Every failure needs a witness")
        self._failures.append(reason)
        if self.witness is None:
            self.witness = OrderedDict()
        self.witness[reason] = witness

    def note(self, text):
        self.notes.append(text)

    def attach(self, report):
        """Attach the report of a verifier this one dispatched to."""
        self.subreports.append(report)
        if report.verdict == FAIL:
            self.fail("subreport:%s" % report.theorem, report.theorem)

    @property
    def failures(self):
        return list(self._failures)

    def conclude(self):
        if not self.hypotheses_hold:
            self.verdict = HYPOTHESIS_NOT_MET
        elif self._failures:
            self.verdict = FAIL
        else:
            self.verdict = PASS
        return self.verdict

    @property
    def passed(self):
        return self.verdict == PASS

    def min_residual(self):
        if not self.residuals:
            return math.inf
        return min(s for (_, s) in self.residuals)

    def as_dict(self):
        out = OrderedDict()
        out["theorem"] = self.theorem
        out["hypotheses"] = OrderedDict(self.hypotheses)
        out["residuals"] = [{"name": n, "slack": s} for (n, s) in self.residuals]
        out["verdict"] = self.verdict
        out["witness"] = self.witness
        if self.notes:
            out["notes"] = list(self.notes)
        if self.data:
            out["data"] = OrderedDict(self.data)
        if self.subreports:
            out["subreports"] = [r.as_dict() for r in self.subreports]
        if self.tolerances is not None:
            out["tolerances"] = self.tolerances.as_dict()
        return out

    def __repr__(self):
        return "<VerdictReport %s: %s>" % (self.theorem, self.verdict)
