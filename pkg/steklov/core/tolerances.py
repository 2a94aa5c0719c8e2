# -*- coding: utf-8 -*-

#    steklov - Steklov spectra of graphs with boundary, tolerances module.
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

"""Named numerical tolerances.

Every computation in steklov that has to decide whether two floats are
"equal" or a value is "zero" reads its threshold from a Tolerances object.
The module level constants are the defaults; `Tolerances.override` and
`Tolerances.from_strings` build modified copies (the command line uses the
latter for its `--tol NAME=VALUE` flag).

Example:
>>> DEFAULT.comparison
1e-08
>>> DEFAULT.override(comparison=1e-6).comparison
1e-06
>>> Tolerances.from_strings(['zero=1e-9']).zero
1e-09
"""
from __future__ import absolute_import

from collections import namedtuple

from steklov.core.errors import ParameterError

# Absolute tolerance when comparing Steklov eigenvalues of two graphs.
COMPARISON_ATOL = 1e-8

# Relative gap under which two eigenvalues of one operator are grouped.
GROUPING_RTOL = 1e-7

# Zero detection for Z and Z1, after unit boundary normalisation.
ZERO_ATOL = 1e-8


class Tolerances(namedtuple("Tolerances", ["comparison", "grouping", "zero"])):

    """Immutable bundle of the three named tolerances."""

    __slots__ = ()

    def override(self, **kwargs):
        for name, value in kwargs.items():
            if name not in self._fields:
                raise ParameterError("Unknown tolerance '%s'" % name)
            if not float(value) > 0.0:
                raise ParameterError("Tolerance '%s' must be positive" % name)
        return self._replace(**dict((k, float(v)) for k, v in kwargs.items()))

    @classmethod
    def from_strings(cls, items, base=None):
        """Parse 'name=value' strings into a Tolerances object."""
        if base is None:
            base = DEFAULT
        updates = {}
        for item in items or ():
            name, sep, value = item.partition("=")
            if not sep:
                raise ParameterError("Expecting NAME=VALUE, got '%s'" % item)
            try:
                updates[name.strip()] = float(value)
            except ValueError:
                raise ParameterError("Not a number: '%s'" % value)
        return base.override(**updates)

    def close(self, a, b):
        """Return True if a and b are equal under the grouping tolerance."""
        return abs(a - b) <= self.grouping * max(abs(a), abs(b), 1.0)

    def as_dict(self):
        return dict(self._asdict())


DEFAULT = Tolerances(COMPARISON_ATOL, GROUPING_RTOL, ZERO_ATOL)


def resolve(tolerances):
    """Return tolerances, or the defaults when None."""
    return DEFAULT if tolerances is None else tolerances
