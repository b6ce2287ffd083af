"""
Singularity catalog
===================

Quotient surface singularities are identified by short strings

* ``A:n,q`` cyclic quotient, ``0 < q < n``, ``gcd(n, q) = 1``
* ``D:n,q`` dihedral, ``1 < q < n``, ``gcd(n, q) = 1``
* ``T:m`` tetrahedral, ``m = 6 (b - 2) + r`` with ``r`` in ``{1, 3, 5}``
* ``O:m`` octahedral, ``m = 12 (b - 2) + r`` with ``gcd(m, 6) = 1``
* ``I:m`` icosahedral, ``m = 30 (b - 2) + r`` with ``gcd(m, 30) = 1``

This module builds their dual resolution graphs and their compactifying
divisors as :py:class:`WeightedGraph` objects. Vertices have stable names

* ``chain[i]`` for the resolution chain of a cyclic singularity
* ``L`` and ``C1, ..., Ck`` for the compactifying chain of a cyclic
  singularity
* ``central``, ``arm1[j]``, ``arm2[j]``, ``arm3[j]`` for star shaped graphs,
  arms counted from the central curve outward
* ``N1, N2, ...`` for the curves created when the central curve of a
  compactifying divisor is normalized

Example
-------

.. code-block:: python

    import pyfillings as pf

    s = pf.parse_singularity("T:7")
    pf.classify_type(s)  # 'Type32'
    g = pf.normalize_central(s)
    [g.weight(v) for v in g.vertices]
"""
from __future__ import division

import re
from fractions import Fraction
from math import gcd

import networkx as nx

from .errors import DomainError
from .hj_fractions import hj_dual, hj_dual_terms, hj_eval, hj_expand
from .lattice import EMBEDDED, curve_kinds
from .parameters import family_arms, family_orders, family_periods

CYCLIC = "A"
DIHEDRAL = "D"
TETRAHEDRAL = "T"
OCTAHEDRAL = "O"
ICOSAHEDRAL = "I"

families = [CYCLIC, DIHEDRAL, TETRAHEDRAL, OCTAHEDRAL, ICOSAHEDRAL]
polyhedral_families = [TETRAHEDRAL, OCTAHEDRAL, ICOSAHEDRAL]

TYPE32 = "Type32"
TYPE31 = "Type31"
BOTH = "Both"

_id_regex = re.compile(r"^\s*([ADTOI])\s*:\s*(\d+)\s*(?:,\s*(\d+))?\s*$")


class SingularityId(object):
    """
    A quotient surface singularity.

    Parameters
    ----------
    family: str
        One of ``"A"``, ``"D"``, ``"T"``, ``"O"``, ``"I"``
    n, q: int, optional
        The parameters of a cyclic or dihedral singularity
    m: int, optional
        The parameter of a tetrahedral, octahedral or icosahedral singularity
    """

    def __init__(self, family, n=None, q=None, m=None):

        if family not in families:
            raise DomainError("Unknown singularity family {!r}".format(family))

        self.family = family

        if family in (CYCLIC, DIHEDRAL):
            if n is None or q is None or m is not None:
                raise DomainError("Family {} takes two parameters n, q".format(family))
            n, q = int(n), int(q)
            low = 0 if family == CYCLIC else 1
            if not low < q < n:
                raise DomainError(
                    "Expected {} < q < n for family {}, got ({}, {})".format(low, family, n, q)
                )
            if gcd(n, q) != 1:
                raise DomainError("n and q should be coprime, got ({}, {})".format(n, q))
            self.n, self.q, self.m = n, q, None

        else:
            if m is None or n is not None or q is not None:
                raise DomainError("Family {} takes one parameter m".format(family))
            m = int(m)
            if m < 1 or (m % family_periods[family]) not in family_arms[family]:
                raise DomainError("{} is not a valid parameter for family {}".format(m, family))
            self.n, self.q, self.m = None, None, m

    @property
    def period(self):
        """The period of the residue classes, 6, 12 or 30"""
        if self.family not in polyhedral_families:
            raise DomainError("Only T, O and I singularities have a period")
        return family_periods[self.family]

    @property
    def residue(self):
        """The residue of ``m`` modulo the period"""
        return self.m % self.period

    @property
    def b(self):
        """The magnitude of the weight of the central curve"""
        if self.family == CYCLIC:
            raise DomainError("Cyclic singularities have no central curve")
        if self.family == DIHEDRAL:
            return hj_expand(self.n, self.q)[0]
        return (self.m - self.residue) // self.period + 2

    @property
    def arms(self):
        """The three resolution arms of a T, O or I singularity"""
        if self.family not in polyhedral_families:
            raise DomainError("Only T, O and I singularities have tabulated arms")
        return [list(arm) for arm in family_arms[self.family][self.residue]]

    def __str__(self):
        if self.family in (CYCLIC, DIHEDRAL):
            return "{}:{},{}".format(self.family, self.n, self.q)
        return "{}:{}".format(self.family, self.m)

    def __repr__(self):
        return "SingularityId({!r})".format(str(self))

    def __eq__(self, other):
        if not isinstance(other, SingularityId):
            return NotImplemented
        return str(self) == str(other)

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        return hash(str(self))


def parse_singularity(text):
    """
    Parse a singularity identifier.

    Parameters
    ----------
    text: str or SingularityId
        The identifier, e.g. ``"A:4,1"``, ``"D:7,3"``, ``"T:7"``

    Returns
    -------
    SingularityId
    """
    if isinstance(text, SingularityId):
        return text

    match = _id_regex.match(str(text))
    if match is None:
        raise DomainError("Cannot parse singularity identifier {!r}".format(text))

    family, first, second = match.groups()

    if family in (CYCLIC, DIHEDRAL):
        if second is None:
            raise DomainError("Family {} expects 'n,q', got {!r}".format(family, text))
        return SingularityId(family, n=int(first), q=int(second))

    if second is not None:
        raise DomainError("Family {} expects a single parameter, got {!r}".format(family, text))
    return SingularityId(family, m=int(first))


class WeightedGraph(object):
    """
    A graph of curves with integer weights.

    The weight of a vertex is the self-intersection of its curve. Vertices
    also carry a kind (embedded or cuspidal) and an optional role tag. Edges
    carry the intersection multiplicity of the two curves. Markers are free
    annotations, for example the curve that carries the cusp.

    Parameters
    ----------
    markers: dict, optional
        Annotations of the graph
    """

    def __init__(self, markers=None):
        self.graph = nx.Graph()
        self.markers = dict(markers) if markers is not None else {}

    def add_vertex(self, name, weight, kind=EMBEDDED, role=None):
        if kind not in curve_kinds:
            raise DomainError("Unknown curve kind {!r}".format(kind))
        if name in self.graph:
            raise DomainError("Duplicate vertex {!r}".format(name))
        self.graph.add_node(name, weight=int(weight), kind=kind, role=role)

    def add_edge(self, u, v, multiplicity=1):
        for x in (u, v):
            if x not in self.graph:
                raise DomainError("Unknown vertex {!r}".format(x))
        if u == v or multiplicity < 1:
            raise DomainError("Invalid edge ({!r}, {!r}, {})".format(u, v, multiplicity))
        self.graph.add_edge(u, v, multiplicity=int(multiplicity))

    @property
    def vertices(self):
        """Vertex names, in insertion order"""
        return list(self.graph.nodes)

    @property
    def edges(self):
        """Edges as ``(u, v, multiplicity)`` with ``u`` inserted before ``v``"""
        order = {v: i for i, v in enumerate(self.graph.nodes)}
        out = []
        for u, v, m in self.graph.edges(data="multiplicity"):
            if order[u] > order[v]:
                u, v = v, u
            out.append((u, v, m))
        return sorted(out, key=lambda e: (order[e[0]], order[e[1]]))

    def weight(self, name):
        return self.graph.nodes[name]["weight"]

    def set_weight(self, name, weight):
        self.graph.nodes[name]["weight"] = int(weight)

    def kind(self, name):
        return self.graph.nodes[name]["kind"]

    def role(self, name):
        return self.graph.nodes[name]["role"]

    def neighbors(self, name):
        order = {v: i for i, v in enumerate(self.graph.nodes)}
        return sorted(self.graph.neighbors(name), key=order.get)

    def multiplicity(self, u, v):
        if not self.graph.has_edge(u, v):
            return 0
        return self.graph.edges[u, v]["multiplicity"]

    def __len__(self):
        return self.graph.number_of_nodes()

    def __contains__(self, name):
        return name in self.graph

    def is_tree(self):
        return len(self) > 0 and nx.is_tree(self.graph)

    def is_chain(self):
        """True if the graph is a path with simple edges"""
        if len(self) == 0 or not self.is_tree():
            return False
        return all(d <= 2 for _, d in self.graph.degree) and all(
            m == 1 for _, _, m in self.edges
        )

    def chain_from(self, start):
        """
        The vertices of a chain, walking from one of its ends.

        Parameters
        ----------
        start: str
            An end of the chain

        Returns
        -------
        list of str
        """
        if not self.is_chain():
            raise DomainError("The graph is not a chain")
        if len(self) > 1 and self.graph.degree[start] != 1:
            raise DomainError("{!r} is not an end of the chain".format(start))

        path = [start]
        while len(path) < len(self):
            nxt = [v for v in self.graph.neighbors(path[-1]) if v not in path]
            path.append(nxt[0])
        return path

    def blow_up_edge(self, u, v, name):
        """
        Blow up the transversal intersection point of two vertices.

        The new vertex has weight -1 and sits between ``u`` and ``v`` whose
        weights drop by one.
        """
        if self.multiplicity(u, v) != 1:
            raise DomainError("Only simple edges can be blown up, got ({!r}, {!r})".format(u, v))
        self.graph.remove_edge(u, v)
        self.add_vertex(name, -1)
        for x in (u, v):
            self.set_weight(x, self.weight(x) - 1)
            self.add_edge(x, name)

    def copy(self):
        g = WeightedGraph(markers=self.markers)
        g.graph = self.graph.copy()
        return g

    def to_dict(self):
        return {
            "vertices": [
                {
                    "name": v,
                    "weight": self.weight(v),
                    "kind": self.kind(v),
                    "role": self.role(v),
                }
                for v in self.vertices
            ],
            "edges": [[u, v, m] for u, v, m in self.edges],
            "markers": dict(self.markers),
        }

    @classmethod
    def from_dict(cls, d):
        g = cls(markers=d.get("markers"))
        for v in d["vertices"]:
            g.add_vertex(v["name"], v["weight"], kind=v.get("kind", EMBEDDED), role=v.get("role"))
        for u, v, m in d["edges"]:
            g.add_edge(u, v, m)
        return g

    def __eq__(self, other):
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __repr__(self):
        return "WeightedGraph({})".format(
            ", ".join("{}:{}".format(v, self.weight(v)) for v in self.vertices)
        )


def _arm_name(i, j):
    return "arm{}[{}]".format(i, j)


def _star(central, arms):
    """A star shaped graph, ``arms`` holding signed weights"""
    g = WeightedGraph()
    g.add_vertex("central", central)
    for i, arm in enumerate(arms):
        prev = "central"
        for j, w in enumerate(arm):
            name = _arm_name(i + 1, j)
            g.add_vertex(name, w)
            g.add_edge(prev, name)
            prev = name
    return g


def _dihedral_arms(s):
    """Magnitudes of the arms of a dihedral resolution, the tail last"""
    terms = hj_expand(s.n, s.q).terms
    return [[2], [2], list(terms[1:])]


def resolution_graph(s):
    """
    Dual graph of the minimal resolution.

    Parameters
    ----------
    s: SingularityId or str
        The singularity

    Returns
    -------
    WeightedGraph
        A chain for cyclic singularities, a star with central curve of weight
        ``-b`` and three arms otherwise
    """
    s = parse_singularity(s)

    if s.family == CYCLIC:
        g = WeightedGraph()
        for i, b in enumerate(hj_expand(s.n, s.q)):
            g.add_vertex("chain[{}]".format(i), -b)
            if i > 0:
                g.add_edge("chain[{}]".format(i - 1), "chain[{}]".format(i))
        return g

    arms = _dihedral_arms(s) if s.family == DIHEDRAL else s.arms
    return _star(-s.b, [[-w for w in arm] for arm in arms])


def compactifying_divisor(s):
    """
    The compactifying divisor of a quotient singularity.

    For a cyclic singularity this is the chain ``L, C1, ..., Ck`` with
    ``L.L = 1`` and ``Ci.Ci = -ci`` where ``n / (n - q) = [c1, ..., ck]``.
    Otherwise it is a star with central curve of weight ``b - 3`` whose arms
    are the duals of the resolution arms.

    Parameters
    ----------
    s: SingularityId or str
        The singularity

    Returns
    -------
    WeightedGraph
    """
    s = parse_singularity(s)

    if s.family == CYCLIC:
        g = WeightedGraph()
        g.add_vertex("L", 1, role="L")
        prev = "L"
        for i, c in enumerate(hj_dual(s.n, s.q)):
            name = "C{}".format(i + 1)
            g.add_vertex(name, -c, role="C")
            g.add_edge(prev, name)
            prev = name
        return g

    arms = _dihedral_arms(s) if s.family == DIHEDRAL else s.arms
    duals = [[-c for c in hj_dual_terms(arm)] for arm in arms]
    return _star(s.b - 3, duals)


def classify_type(s):
    """
    Type of a tetrahedral, octahedral or icosahedral singularity.

    Returns
    -------
    str
        ``"Type32"`` if a branch of two -2 curves meets the central curve,
        ``"Type31"`` if a branch made of a single -3 curve does, ``"Both"``
        if both branches are present
    """
    s = parse_singularity(s)

    if s.family not in polyhedral_families:
        raise DomainError("Only T, O and I singularities have a type, got {}".format(s))

    arms = s.arms[1:]
    has32 = [2, 2] in arms
    has31 = [3] in arms

    if has32 and has31:
        return BOTH
    elif has32:
        return TYPE32
    elif has31:
        return TYPE31
    else:
        raise DomainError("The arms of {} have no recognized type".format(s))


def _head(g):
    """The vertex of arm 3 adjacent to the central curve"""
    others = set([_arm_name(1, 0), _arm_name(2, 0)])
    return [v for v in g.neighbors("central") if v not in others][0]


def _normalized(g):
    """Blow up the corner of the central curve and arm 3 until the central weight is -1"""
    g = g.copy()
    n = 0
    if g.weight("central") < -1:
        raise DomainError("The central curve has weight below -1")
    while g.weight("central") > -1:
        n += 1
        g.blow_up_edge("central", _head(g), "N{}".format(n))
    return g


def normalize_central(s):
    """
    Compactifying divisor with a central curve of weight -1.

    When ``b = 2`` the divisor is returned unchanged. Otherwise the
    intersection of the central curve with the third arm is blown up
    ``b - 2`` times.

    Parameters
    ----------
    s: SingularityId or str
        A tetrahedral, octahedral or icosahedral singularity

    Returns
    -------
    WeightedGraph
    """
    s = parse_singularity(s)
    if s.family not in polyhedral_families:
        raise DomainError("Normalization is only defined for T, O and I singularities, got {}".format(s))
    return _normalized(compactifying_divisor(s))


def normalized_divisor(s):
    """Normalized compactifying divisor of a dihedral or T/O/I singularity"""
    s = parse_singularity(s)
    if s.family == CYCLIC:
        raise DomainError("Cyclic singularities have no central curve")
    return _normalized(compactifying_divisor(s))


def head_vertex(g):
    """Name of the vertex of arm 3 adjacent to the central curve"""
    return _head(g)


def third_branch_weight(s):
    """
    The magnitude ``a`` of the first curve of the third arm after
    normalization. It is 1 when ``b >= 3``.
    """
    g = normalized_divisor(s)
    return -g.weight(_head(g))


def seifert_residue(family, arms):
    """
    Residue of ``m`` determined by three resolution arms.

    Each arm with continued fraction ``alpha / beta`` contributes
    ``beta / alpha`` and the residue is ``period * (2 - sum)``.

    Parameters
    ----------
    family: str
        ``"T"``, ``"O"`` or ``"I"``
    arms: list of list of int
        The magnitudes of the arm weights, read from the central curve

    Returns
    -------
    int
    """
    if family not in polyhedral_families:
        raise DomainError("Unknown polyhedral family {!r}".format(family))

    values = [hj_eval(arm) for arm in arms]
    alphas = sorted(v.numerator for v in values)
    if tuple(alphas) != family_orders[family]:
        raise DomainError(
            "The arms {} do not have the orders {} of family {}".format(
                arms, family_orders[family], family
            )
        )

    total = sum(Fraction(v.denominator, v.numerator) for v in values)
    r = family_periods[family] * (2 - total)
    if r.denominator != 1:
        raise DomainError("Non integral residue for arms {}".format(arms))
    return int(r)
