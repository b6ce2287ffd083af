# Utility functions for the package
# Copyright (C) 2024  pyfillings developers
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.
#
# You should have received a copy of the MIT License along with this program. If
# not, see <https://opensource.org/licenses/MIT>.
import hashlib
import json

import numpy as np

from .catalog import WeightedGraph
from .configuration import Configuration
from .lattice import CUSPIDAL


def _quote(name):
    return '"{}"'.format(str(name).replace('"', '\\"'))


def export_dot(obj):
    """
    Render a weighted graph or a configuration in the DOT language.

    Vertices are labeled ``name:weight`` and appear in insertion order.
    Edges of multiplicity above one carry it as label. The cusp is drawn as
    a separate point shaped node joined to the curve it lies on.

    Parameters
    ----------
    obj: WeightedGraph or Configuration

    Returns
    -------
    str
        An undirected ``graph`` in the DOT language
    """
    if isinstance(obj, Configuration):
        g = obj.to_graph()
    elif isinstance(obj, WeightedGraph):
        g = obj
    else:
        raise TypeError("Cannot export an object of type {}".format(type(obj).__name__))

    lines = ["graph G {"]

    for v in g.vertices:
        lines.append("  {} [label={}];".format(_quote(v), _quote("{}:{:+d}".format(v, g.weight(v)))))

    for u, v, m in g.edges:
        attr = " [label={}]".format(m) if m > 1 else ""
        lines.append("  {} -- {}{};".format(_quote(u), _quote(v), attr))

    cusp = g.markers.get("cusp")
    if cusp is None:
        cusp = [v for v in g.vertices if g.kind(v) == CUSPIDAL]
    if len(cusp) > 0:
        lines.append('  "cusp" [shape=point];')
        for v in cusp:
            lines.append('  "cusp" -- {} [style=dashed];'.format(_quote(v)))

    lines.append("}")
    return "\n".join(lines) + "\n"


def _to_builtin(obj):
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    raise TypeError("Object of type {} is not JSON serializable".format(type(obj).__name__))


def canonical_json(obj):
    """JSON text with sorted keys and fixed separators, stable across runs"""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), default=_to_builtin)


def digest(obj):
    """sha256 hex digest of the canonical JSON text of an object"""
    return hashlib.sha256(canonical_json(obj).encode("utf8")).hexdigest()
