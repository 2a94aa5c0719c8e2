# -*- coding: utf-8 -*-

#    steklov - Steklov spectra of graphs with boundary, containers package.
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

from __future__ import absolute_import


from steklov.containers.graph import WeightedBoundaryGraph
from steklov.containers.functions import VertexFunction, EdgeFunction
from steklov.containers.spectrum import (
    Eigenvalue,
    SteklovSpectrum,
    DirichletSteklovSpectrum,
    ClosedFormSpectrum,
)
from steklov.containers.decomposition import ToothDecomposition
from steklov.containers.report import VerdictReport
