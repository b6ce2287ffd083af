"""
Isomorphism classes of configurations
=====================================

Two configurations reached by different blow-up sequences are often the same
up to renaming of curves and points. They are compared through their
incidence graph: a bipartite graph with one node per curve and one node per
marked point, labeled with the role, kind and weight of the curves, the cusp
flag of the points and the local multiplicities.

Configurations are first bucketed by a cheap signature, then compared with
:py:func:`networkx.is_isomorphic` inside a bucket.
"""
from collections import defaultdict

import networkx as nx
from networkx.algorithms import isomorphism

from .configuration import frame_roles

_node_match = isomorphism.categorical_node_match("label", None)
_edge_match = isomorphism.categorical_edge_match("label", None)


def _curve_label(curve):
    role = curve.role if curve.role in frame_roles else "S"
    return ("curve", role, curve.kind, curve.weight)


def incidence_graph(config):
    """
    The labeled incidence graph of a configuration.

    Parameters
    ----------
    config: Configuration

    Returns
    -------
    networkx.Graph
        Curve nodes ``("c", name)``, point nodes ``("p", id)``; a curve and a
        point are joined when the curve passes through the point, the edge
        label being the multiplicity; two curves tangent at a point are
        joined with their local intersection as label
    """
    G = nx.Graph()

    for name, c in config.curves.items():
        G.add_node(("c", name), label=_curve_label(c))

    for pid, p in config.points.items():
        tangencies = sorted(v for v in p.local.values() if v >= 2)
        G.add_node(("p", pid), label=("point", p.cusp, len(p.multiplicities), tuple(tangencies)))
        for x, m in p.multiplicities.items():
            G.add_edge(("c", x), ("p", pid), label=("through", m))
        for key, v in p.local.items():
            if v >= 2:
                x, y = sorted(key)
                # a pair of curves is tangent at one point at most
                G.add_edge(("c", x), ("c", y), label=("tangent", v))

    return G


def signature(G):
    """A cheap invariant of a labeled incidence graph"""
    labels = tuple(sorted(repr(d) for _, d in G.nodes(data="label")))
    edges = tuple(sorted(repr(d) for _, _, d in G.edges(data="label")))
    degrees = tuple(sorted(d for _, d in G.degree()))
    return (G.number_of_nodes(), G.number_of_edges(), degrees, labels, edges)


def is_isomorphic(config1, config2):
    """True if the two configurations are the same up to renaming"""
    G1, G2 = incidence_graph(config1), incidence_graph(config2)
    if signature(G1) != signature(G2):
        return False
    return nx.is_isomorphic(G1, G2, node_match=_node_match, edge_match=_edge_match)


class ConfigurationIndex(object):
    """
    A set of configurations up to isomorphism.

    Example
    -------

    .. code-block:: python

        index = ConfigurationIndex()
        index.add(config)  # True, first time seen
        index.add(config.renamed({"E1": "X"}))  # False
    """

    def __init__(self):
        self._buckets = defaultdict(list)
        self._count = 0

    def add(self, config):
        """
        Add a configuration.

        Returns
        -------
        bool
            True if no isomorphic configuration was in the index
        """
        G = incidence_graph(config)
        bucket = self._buckets[signature(G)]
        for H in bucket:
            if nx.is_isomorphic(G, H, node_match=_node_match, edge_match=_edge_match):
                return False
        bucket.append(G)
        self._count += 1
        return True

    def __len__(self):
        return self._count
