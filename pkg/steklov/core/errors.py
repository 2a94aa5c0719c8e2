# -*- coding: utf-8 -*-

#    steklov - Steklov spectra of graphs with boundary, errors module.
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


class Error(Exception):

    pass


class GraphFormatError(Error):

    pass


class DuplicateVertexError(Error):

    pass


class DuplicateEdgeError(Error):

    pass


class UnknownEndpointError(Error):

    pass


class NonPositiveWeightError(Error):

    pass


class LoopEdgeError(Error):

    pass


class NotASubgraphError(Error):

    pass


class NotACombError(Error):

    pass


class WedgePointError(Error):

    pass


class DisconnectedGraphError(Error):

    pass


class SingularInteriorError(Error):

    """The interior block of the stiffness matrix is singular.

    `component` lists the interior vertices that see neither the boundary
    nor the zero set.
    """

    def __init__(self, message, component=()):
        Error.__init__(self, message)
        self.component = tuple(component)


class NotBoundaryVertexError(Error):

    pass


class ToleranceAmbiguityError(Error):

    pass


class ParameterError(Error):

    pass


class RootFindingError(Error):

    pass


class CertificateError(Error):

    pass
