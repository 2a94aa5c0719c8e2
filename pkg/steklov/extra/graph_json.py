# -*- coding: utf-8 -*-

#    steklov - Steklov spectra of graphs with boundary, graph JSON module.
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

"""Read and write graphs and reports as JSON.

A graph is stored as

    {"vertices": [{"id": "v0", "measure": 1.0, "boundary": true}, ...],
     "edges": [{"u": "v0", "v": "v1", "weight": 1.0}, ...]}

Floats are written with their shortest round-trip representation, so a
file read back reproduces the graph bit for bit. Infinite eigenvalues are
written as the string "+inf".

>>> from steklov.core.families import make_path
>>> g = make_path(2)
>>> graph_from_dict(graph_to_dict(g)) == g
True
>>> dumps({'sigma': [0.0, float('inf')]})
'{"sigma": [0.0, "+inf"]}'
"""
from __future__ import absolute_import

import io
import json
import math
import sys
from collections import OrderedDict

import numpy as np
import six

from steklov.core.errors import GraphFormatError
from steklov.core.graphs import build_graph

_GRAPH_KEYS = frozenset(["vertices", "edges"])


def graph_to_dict(graph):
    """Return the JSON layout of graph; vertices and edges keep the graph
    order."""
    vertices = [
        OrderedDict(
            [("id", v), ("measure", graph.m(v)), ("boundary", v in graph.boundary)]
        )
        for v in graph.vertices
    ]
    edges = [
        OrderedDict([("u", u), ("v", v), ("weight", graph.w(u, v))])
        for (u, v) in graph.edges
    ]
    return OrderedDict([("vertices", vertices), ("edges", edges)])


def graph_from_dict(data):
    """Build a WeightedBoundaryGraph from its JSON layout.

    Raise GraphFormatError on unknown or missing keys; the validation
    errors of build_graph pass through.
    """
    if not hasattr(data, "keys"):
        raise GraphFormatError("A graph must be a JSON object")
    unknown = set(data.keys()) - _GRAPH_KEYS
    if unknown:
        raise GraphFormatError("Unknown graph fields %s" % sorted(unknown))
    if "vertices" not in data:
        raise GraphFormatError("A graph needs a 'vertices' list")
    for spec in data["vertices"]:
        if hasattr(spec, "keys") and not isinstance(spec.get("id"), six.string_types):
            raise GraphFormatError("Vertex ids must be strings: %r" % (spec,))
    return build_graph(data["vertices"], data.get("edges", []))


def _parse(text):
    try:
        return json.loads(text, object_pairs_hook=OrderedDict)
    except ValueError as exc:
        raise GraphFormatError("Not valid JSON: %s" % exc)


def loads(text):
    return graph_from_dict(_parse(text))


def read_json(filename):
    """Parse a JSON file; '-' reads standard input."""
    if filename == "-":
        return _parse(sys.stdin.read())
    with io.open(filename, "r", encoding="utf-8") as f:
        return _parse(f.read())


def read_graph(filename):
    return graph_from_dict(read_json(filename))


def _plain(obj):
    """Turn numpy values, sets and infinities into plain JSON values."""
    if hasattr(obj, "as_dict"):
        return _plain(obj.as_dict())
    if isinstance(obj, dict):
        return OrderedDict((str(k), _plain(v)) for (k, v) in obj.items())
    if isinstance(obj, (frozenset, set)):
        return sorted(_plain(v) for v in obj)
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _plain(obj.tolist())
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (six.integer_types, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        obj = float(obj)
        if math.isinf(obj):
            return "+inf" if obj > 0 else "-inf"
        if math.isnan(obj):
            return "nan"
        return obj
    return obj


def dumps(obj, indent=None):
    """Serialise a report, spectrum or graph dict deterministically."""
    return json.dumps(_plain(obj), indent=indent, allow_nan=False)


def write_json(obj, filename):
    """Write obj to filename ('-' writes standard output)."""
    text = dumps(obj, indent=2) + "\n"
    if filename == "-":
        sys.stdout.write(text)
        return
    with io.open(filename, "w", encoding="utf-8") as f:
        f.write(six.text_type(text))


def write_graph(graph, filename):
    write_json(graph_to_dict(graph), filename)
