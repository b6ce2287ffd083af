"""
Curve configurations
====================

A :py:class:`Configuration` is a set of named rational curves living in an
:py:class:`~pyfillings.lattice.AmbientLattice`, together with the marked
points where they meet. Every point records

* the multiplicity of each curve through it (2 at a (2,3)-cusp, else 1)
* the local intersection number of each pair of curves through it
* the tangent directions, as groups of curves sharing a tangent line

The intersection number of two curves is the sum of their local
intersection numbers, and :py:meth:`Configuration.check` verifies this
against the lattice after every rewrite.

Configurations are rewritten by :py:func:`blow_up` and :py:func:`blow_down`
which return new objects and leave their input untouched.

Example
-------

.. code-block:: python

    import pyfillings as pf

    config = pf.standard_model("CuspCubic_P2")
    up = pf.blow_up(config, pf.RewriteStep(pf.BLOW_UP_AT_POINT, "cusp"))
    up.weight("D")  # 5
    down = pf.blow_down(up, "E1")
    down.weight("D")  # 9, the cusp is back
"""
from __future__ import division

import collections
import itertools

import networkx as nx
import numpy as np

from .catalog import WeightedGraph
from .errors import ConfigurationError, DomainError
from .lattice import (
    CUSPIDAL,
    EMBEDDED,
    AmbientLattice,
    CurveClass,
    adjunction_check,
)

# roles of the curves
ROLE_L = "L"
ROLE_A = "A"
ROLE_B = "B"
ROLE_D = "D"
ROLE_STRING = "C"
ROLE_EXCEPTIONAL = "E"

roles = [ROLE_L, ROLE_A, ROLE_B, ROLE_D, ROLE_STRING, ROLE_EXCEPTIONAL, None]
frame_roles = [ROLE_L, ROLE_A, ROLE_B, ROLE_D]

# kinds of rewrite steps
BLOW_UP_AT_POINT = "blow_up_at_point"
BLOW_UP_FRESH = "blow_up_fresh"
BLOW_DOWN = "blow_down"

step_kinds = [BLOW_UP_AT_POINT, BLOW_UP_FRESH, BLOW_DOWN]


def _pair_key(x, y):
    return frozenset((x, y))


class Curve(object):
    """
    A named curve of a configuration.

    Parameters
    ----------
    name: str
        Name of the curve
    curve_class: CurveClass
        Homology class and kind
    role: str, optional
        One of ``"L"``, ``"A"``, ``"B"``, ``"D"``, ``"C"``, ``"E"`` or None
    """

    def __init__(self, name, curve_class, role=None):
        if role not in roles:
            raise DomainError("Unknown role {!r}".format(role))
        self.name = name
        self.curve_class = curve_class
        self.role = role

    @property
    def kind(self):
        return self.curve_class.kind

    @property
    def weight(self):
        return self.curve_class.self_intersection()

    def replace(self, curve_class=None, role=False, name=None):
        return Curve(
            self.name if name is None else name,
            self.curve_class if curve_class is None else curve_class,
            self.role if role is False else role,
        )

    def __repr__(self):
        return "Curve({}, {!r}, role={})".format(self.name, self.curve_class, self.role)


class Point(object):
    """
    A marked point of a configuration.

    Parameters
    ----------
    pid: str
        Identifier of the point
    multiplicities: dict
        Maps the name of each curve through the point to its multiplicity
    local: dict, optional
        Maps a frozenset of two curve names to their local intersection
        number; missing pairs default to the product of the multiplicities
    directions: iterable of iterable of str, optional
        Groups of curves sharing a tangent line; by default every curve has
        its own direction
    """

    def __init__(self, pid, multiplicities, local=None, directions=None):

        self.pid = pid
        self.multiplicities = dict(multiplicities)

        self.local = {}
        for x, y in itertools.combinations(sorted(self.multiplicities), 2):
            key = _pair_key(x, y)
            default = self.multiplicities[x] * self.multiplicities[y]
            self.local[key] = default if local is None else int(local.get(key, default))

        if directions is None:
            directions = [[x] for x in sorted(self.multiplicities)]
        self.directions = tuple(
            sorted((frozenset(g) for g in directions), key=lambda g: sorted(g))
        )

    @property
    def members(self):
        return sorted(self.multiplicities)

    @property
    def cusp(self):
        """True if a curve has a (2,3)-cusp at this point"""
        return any(m >= 2 for m in self.multiplicities.values())

    def multiplicity(self, name):
        return self.multiplicities.get(name, 0)

    def local_intersection(self, x, y):
        if x not in self.multiplicities or y not in self.multiplicities:
            return 0
        return self.local[_pair_key(x, y)]

    def direction_of(self, name):
        for g in self.directions:
            if name in g:
                return g
        raise ConfigurationError("curve is not through the point", name=name)

    def to_dict(self):
        return {
            "id": self.pid,
            "multiplicities": {x: self.multiplicities[x] for x in self.members},
            "local": [
                sorted(key) + [v]
                for key, v in sorted(self.local.items(), key=lambda kv: sorted(kv[0]))
            ],
            "directions": [sorted(g) for g in self.directions],
        }

    @classmethod
    def from_dict(cls, d):
        local = {_pair_key(x, y): v for x, y, v in d["local"]}
        return cls(d["id"], d["multiplicities"], local=local, directions=d["directions"])

    def __repr__(self):
        return "Point({}, {})".format(self.pid, self.multiplicities)


class RewriteStep(object):
    """
    One blow-up or blow-down.

    Parameters
    ----------
    kind: str
        ``"blow_up_at_point"``, ``"blow_up_fresh"`` or ``"blow_down"``
    target: str
        The point id for a blow-up at a point, the curve name otherwise
    new_name: str, optional
        Name of the exceptional curve created by a blow-up
    """

    def __init__(self, kind, target, new_name=None):
        if kind not in step_kinds:
            raise DomainError("Unknown rewrite step {!r}".format(kind))
        if kind == BLOW_DOWN and new_name is not None:
            raise DomainError("A blow-down creates no curve")
        self.kind = kind
        self.target = target
        self.new_name = new_name

    def to_list(self):
        out = [self.kind, self.target]
        if self.new_name is not None:
            out.append(self.new_name)
        return out

    @classmethod
    def from_list(cls, data):
        return cls(*data)

    def __eq__(self, other):
        if not isinstance(other, RewriteStep):
            return NotImplemented
        return self.to_list() == other.to_list()

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        return hash(tuple(self.to_list()))

    def __repr__(self):
        return "{}({})".format(self.kind, ", ".join(self.to_list()[1:]))


class Configuration(object):
    """
    Named curves in a lattice with their marked intersection points.

    Parameters
    ----------
    lattice: AmbientLattice
        The ambient lattice
    curves: iterable of Curve
        The curves, with classes in ``lattice``
    points: iterable of Point
        The marked points
    counter: int, optional
        Counter used to name the curves and points created by rewrites
    """

    def __init__(self, lattice, curves, points, counter=0):

        self.lattice = lattice
        self.curves = collections.OrderedDict((c.name, c) for c in curves)
        self.points = collections.OrderedDict((p.pid, p) for p in points)
        self.counter = counter

        for c in self.curves.values():
            if c.curve_class.lattice is not lattice and c.curve_class.lattice != lattice:
                raise ConfigurationError("class lives in another lattice", name=c.name)

    def curve(self, name):
        try:
            return self.curves[name]
        except KeyError:
            raise ConfigurationError("no such curve", name=name)

    def point(self, pid):
        try:
            return self.points[pid]
        except KeyError:
            raise ConfigurationError("no such point", name=pid)

    def weight(self, name):
        return self.curve(name).weight

    def kind(self, name):
        return self.curve(name).kind

    def role(self, name):
        return self.curve(name).role

    def names_with_role(self, role):
        return [x for x, c in self.curves.items() if c.role == role]

    def intersection(self, x, y):
        return self.lattice.pair_vectors(
            self.curve(x).curve_class.coefficients, self.curve(y).curve_class.coefficients
        )

    def intersection_matrix(self):
        """
        Returns
        -------
        names: list of str
            The curve names, in order
        matrix: numpy.ndarray
            The pairwise intersection numbers
        """
        names = list(self.curves)
        if len(names) == 0:
            return names, np.zeros((0, 0), dtype=np.int64)
        C = np.array([self.curves[x].curve_class.coefficients for x in names], dtype=np.int64)
        return names, C.dot(self.lattice.gram).dot(C.T)

    def points_on(self, name):
        return [p for p in self.points.values() if name in p.multiplicities]

    def cusp_point(self):
        """The marked cusp point, or None"""
        cusps = [p for p in self.points.values() if p.cusp]
        return cusps[0] if len(cusps) > 0 else None

    def neighbors(self, name):
        """Curves meeting ``name``"""
        out = set()
        for p in self.points_on(name):
            out.update(p.multiplicities)
        out.discard(name)
        return [x for x in self.curves if x in out]

    def c1_squared(self):
        return self.lattice.c1_squared()

    def fresh_name(self, prefix):
        self.counter += 1
        return "{}{}".format(prefix, self.counter)

    def copy(self):
        return Configuration(self.lattice, self.curves.values(), self.points.values(), self.counter)

    def renamed(self, mapping):
        """A copy where curves are renamed by ``mapping``"""
        curves = [c.replace(name=mapping.get(c.name, c.name)) for c in self.curves.values()]
        points = []
        for p in self.points.values():
            mult = {mapping.get(x, x): m for x, m in p.multiplicities.items()}
            local = {
                _pair_key(*[mapping.get(x, x) for x in key]): v for key, v in p.local.items()
            }
            dirs = [[mapping.get(x, x) for x in g] for g in p.directions]
            points.append(Point(p.pid, mult, local, dirs))
        return Configuration(self.lattice, curves, points, self.counter)

    def with_roles(self, mapping):
        """A copy where curve roles are set by ``mapping``"""
        curves = [
            c.replace(role=mapping[c.name]) if c.name in mapping else c
            for c in self.curves.values()
        ]
        return Configuration(self.lattice, curves, self.points.values(), self.counter)

    def string_order(self, anchor=None):
        """
        The curves of role ``"C"`` ordered as a chain from ``anchor``.

        The anchor defaults to ``D``, or to ``L`` when there is no ``D``.
        """
        if anchor is None:
            anchor = ROLE_D if ROLE_D in self.curves else ROLE_L
        return chain_order(self, anchor, self.names_with_role(ROLE_STRING))

    def check(self):
        """
        Verify the incidence records against the lattice.

        Raises
        ------
        ConfigurationError
            If the local intersections do not add up to the intersection
            numbers, if a curve fails adjunction, or if cusps are
            inconsistent
        """

        for p in self.points.values():
            for x, m in p.multiplicities.items():
                if x not in self.curves:
                    raise ConfigurationError("point on unknown curve {}".format(x), name=p.pid)
                if m < 1 or m > 2:
                    raise ConfigurationError("invalid multiplicity {} of {}".format(m, x), name=p.pid)
            for key, v in p.local.items():
                x, y = sorted(key)
                if v < p.multiplicities[x] * p.multiplicities[y]:
                    raise ConfigurationError(
                        "local intersection of {} and {} below the product of multiplicities".format(x, y),
                        name=p.pid,
                    )
            grouped = sorted(x for g in p.directions for x in g)
            if grouped != p.members:
                raise ConfigurationError("directions do not partition the curves", name=p.pid)
            if len(p.multiplicities) < 2 and not p.cusp:
                raise ConfigurationError("marked point on a single smooth curve", name=p.pid)

        cusps = [p for p in self.points.values() if p.cusp]
        if len(cusps) > 1:
            raise ConfigurationError("more than one cusp point")

        for name, c in self.curves.items():
            n_cusps = sum(1 for p in cusps if p.multiplicity(name) == 2)
            if c.kind == CUSPIDAL and n_cusps != 1:
                raise ConfigurationError("cuspidal curve without its cusp point", name=name)
            if c.kind == EMBEDDED and n_cusps != 0:
                raise ConfigurationError("embedded curve through a cusp with multiplicity 2", name=name)
            if not adjunction_check(c.curve_class):
                raise ConfigurationError("adjunction fails for {!r}".format(c.curve_class), name=name)

        names, M = self.intersection_matrix()
        for i, j in itertools.combinations(range(len(names)), 2):
            x, y = names[i], names[j]
            total = sum(p.local_intersection(x, y) for p in self.points.values())
            if total != M[i, j]:
                raise ConfigurationError(
                    "{} and {} meet {} times in the lattice but {} times at the points".format(
                        x, y, M[i, j], total
                    )
                )

        return True

    def apply(self, steps, check=True):
        """Apply a sequence of rewrite steps"""
        config = self
        for step in steps:
            config = apply_step(config, step, check=check)
        return config

    @classmethod
    def from_graph(cls, graph):
        """
        The configuration of the curves of a weighted graph.

        The lattice is the plumbing lattice spanned by the vertices, each
        vertex is a basis vector. A simple edge is a transversal point, an
        edge of multiplicity 2 a tangency. A cuspidal vertex gets its own
        cusp point.

        Parameters
        ----------
        graph: WeightedGraph

        Returns
        -------
        Configuration
        """
        names = graph.vertices
        index = {v: i for i, v in enumerate(names)}
        n = len(names)

        gram = np.zeros((n, n), dtype=np.int64)
        kappa = np.zeros(n, dtype=np.int64)
        for v in names:
            i = index[v]
            gram[i, i] = graph.weight(v)
            kappa[i] = graph.weight(v) + (2 if graph.kind(v) == EMBEDDED else 0)
        for u, v, m in graph.edges:
            gram[index[u], index[v]] = gram[index[v], index[u]] = m

        lattice = AmbientLattice.from_gram(gram, kappa=kappa, names=names)

        curves = [
            Curve(
                v,
                CurveClass(lattice, lattice.basis_vector(index[v]), kind=graph.kind(v)),
                role=graph.role(v),
            )
            for v in names
        ]

        points = []
        for u, v, m in graph.edges:
            if m > 2:
                raise ConfigurationError("contact of order {} is not supported".format(m), name=u)
            dirs = [[u, v]] if m == 2 else [[u], [v]]
            points.append(Point("p:{}-{}".format(u, v), {u: 1, v: 1}, {_pair_key(u, v): m}, dirs))
        for v in names:
            if graph.kind(v) == CUSPIDAL:
                points.append(Point("cusp:{}".format(v), {v: 2}))

        return cls(lattice, curves, points)

    def to_graph(self):
        """The weighted graph of the curves, edges weighted by intersection numbers"""
        g = WeightedGraph()
        for name, c in self.curves.items():
            g.add_vertex(name, c.weight, kind=c.kind, role=c.role)
        names, M = self.intersection_matrix()
        for i, j in itertools.combinations(range(len(names)), 2):
            if M[i, j] > 0:
                g.add_edge(names[i], names[j], int(M[i, j]))
        cusp = self.cusp_point()
        if cusp is not None:
            g.markers["cusp"] = cusp.members
        return g

    def to_dict(self):
        return {
            "lattice": self.lattice.to_dict(),
            "curves": [
                {
                    "name": c.name,
                    "role": c.role,
                    "kind": c.kind,
                    "coefficients": list(c.curve_class.coefficients),
                }
                for c in self.curves.values()
            ],
            "points": [p.to_dict() for p in self.points.values()],
            "counter": self.counter,
        }

    @classmethod
    def from_dict(cls, d):
        lattice = AmbientLattice.from_dict(d["lattice"])
        curves = [
            Curve(c["name"], CurveClass(lattice, c["coefficients"], kind=c["kind"]), role=c["role"])
            for c in d["curves"]
        ]
        points = [Point.from_dict(p) for p in d["points"]]
        return cls(lattice, curves, points, counter=d.get("counter", 0))

    def __eq__(self, other):
        if not isinstance(other, Configuration):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __repr__(self):
        return "Configuration({})".format(
            ", ".join("{}:{}".format(x, c.weight) for x, c in self.curves.items())
        )


def _group_directions(members, local):
    """Union of the curves whose local intersection is at least 2"""
    g = nx.Graph()
    g.add_nodes_from(members)
    for key, v in local.items():
        if v >= 2:
            g.add_edges_from([tuple(key)])
    return [sorted(c) for c in nx.connected_components(g)]


def _blow_up_point(config, p, new_name):

    lattice = config.lattice.blown_up()
    e_index = lattice.rank - 1

    if new_name is None:
        new_name = config.fresh_name("E")
    if new_name in config.curves:
        raise ConfigurationError("a curve with this name exists", name=new_name)

    curves = []
    for name, c in config.curves.items():
        coeffs = list(c.curve_class.coefficients) + [0]
        m = p.multiplicity(name)
        coeffs[e_index] -= m
        kind = EMBEDDED if m == 2 else c.kind
        curves.append(c.replace(curve_class=CurveClass(lattice, coeffs, kind=kind)))
    curves.append(
        Curve(new_name, CurveClass(lattice, lattice.basis_vector(e_index)), role=ROLE_EXCEPTIONAL)
    )

    # curves in different directions are separated
    for g1, g2 in itertools.combinations(p.directions, 2):
        for x in g1:
            for y in g2:
                rest = p.local_intersection(x, y) - p.multiplicity(x) * p.multiplicity(y)
                if rest != 0:
                    raise ConfigurationError(
                        "{} and {} keep meeting after separation of their directions".format(x, y),
                        name=p.pid,
                    )

    points = [q for q in config.points.values() if q.pid != p.pid]
    for group in p.directions:
        group = sorted(group)
        mult = {x: 1 for x in group}
        mult[new_name] = 1
        local = {_pair_key(x, new_name): p.multiplicity(x) for x in group}
        for x, y in itertools.combinations(group, 2):
            rest = p.local_intersection(x, y) - p.multiplicity(x) * p.multiplicity(y)
            if rest < 1:
                raise ConfigurationError(
                    "{} and {} share a direction but do not meet again".format(x, y), name=p.pid
                )
            local[_pair_key(x, y)] = rest
        dirs = _group_directions(list(mult), local)
        points.append(Point(config.fresh_name("p"), mult, local, dirs))

    return Configuration(lattice, curves, points, config.counter)


def blow_up(config, step, check=True):
    """
    Blow up a marked point, or a fresh point of a curve.

    The lattice gains a basis vector ``e``. Every curve through the point with
    multiplicity ``m`` has its class lowered by ``m e``. The new exceptional
    curve meets each tangent direction of the point at a new marked point.
    A (2,3)-cusp becomes a smooth point tangent to the exceptional curve.

    Parameters
    ----------
    config: Configuration
        The configuration, left untouched
    step: RewriteStep
        A step of kind ``"blow_up_at_point"`` or ``"blow_up_fresh"``
    check: bool, optional
        Verify the result with :py:meth:`Configuration.check` (default True)

    Returns
    -------
    Configuration
    """
    config = config.copy()

    if step.kind == BLOW_UP_AT_POINT:
        p = config.point(step.target)
        new = _blow_up_point(config, p, step.new_name)

    elif step.kind == BLOW_UP_FRESH:
        config.curve(step.target)
        p = Point(config.fresh_name("p"), {step.target: 1})
        config.points[p.pid] = p
        new = _blow_up_point(config, p, step.new_name)

    else:
        raise ConfigurationError("not a blow-up step: {!r}".format(step))

    if check:
        new.check()
    return new


def blow_down(config, name, check=True):
    """
    Contract an embedded -1 curve.

    The curves meeting it are merged at a new marked point. Their pairwise
    local intersection grows by the product of their intersections with the
    contracted curve. A smooth curve tangent to it becomes a (2,3)-cusp, which
    is only allowed when the configuration has no other cusp. Any other
    singular image is rejected.

    Parameters
    ----------
    config: Configuration
        The configuration, left untouched
    name: str
        The curve to contract
    check: bool, optional
        Verify the result with :py:meth:`Configuration.check` (default True)

    Returns
    -------
    Configuration
    """
    E = config.curve(name)

    if E.kind != EMBEDDED or E.weight != -1:
        raise ConfigurationError(
            "only embedded -1 curves can be blown down, got a {} curve of weight {}".format(
                E.kind, E.weight
            ),
            name=name,
        )

    on_E = config.points_on(name)
    config = config.copy()

    totals = {}
    for x in config.curves:
        if x == name:
            continue
        through = [p for p in on_E if x in p.multiplicities]
        if len(through) == 0:
            continue
        total = sum(p.local_intersection(x, name) for p in through)

        if any(p.multiplicity(x) > 1 for p in through):
            raise ConfigurationError("the cusp of {} lies on the contracted curve".format(x), name=name)
        if len(through) > 1:
            raise ConfigurationError("{} would acquire a node".format(x), name=name)
        if total > 2:
            raise ConfigurationError("{} would acquire a singularity worse than a cusp".format(x), name=name)
        if total == 2:
            if config.curves[x].kind == CUSPIDAL or config.cusp_point() is not None:
                raise ConfigurationError("{} would be a second cusp".format(x), name=name)

        totals[x] = total

    try:
        lattice, transform = config.lattice.contracted(E.curve_class.coefficients)
    except DomainError as e:
        raise ConfigurationError(str(e), name=name)

    curves = []
    for x, c in config.curves.items():
        if x == name:
            continue
        kind = CUSPIDAL if totals.get(x, 0) == 2 else c.kind
        curves.append(
            c.replace(curve_class=CurveClass(lattice, transform(c.curve_class.coefficients), kind=kind))
        )

    points = [p for p in config.points.values() if name not in p.multiplicities]

    members = sorted(totals)
    if len(members) >= 2 or any(t == 2 for t in totals.values()):
        mult = {x: totals[x] for x in members}
        local = {}
        for x, y in itertools.combinations(members, 2):
            old = sum(p.local_intersection(x, y) for p in on_E)
            local[_pair_key(x, y)] = old + totals[x] * totals[y]
        dirs = [
            [x for x in p.members if x != name] for p in on_E if len(p.multiplicities) > 1
        ]
        points.append(Point(config.fresh_name("p"), mult, local, dirs))

    new = Configuration(lattice, curves, points, config.counter)
    if check:
        new.check()
    return new


def apply_step(config, step, check=True):
    """Apply one rewrite step"""
    if step.kind == BLOW_DOWN:
        return blow_down(config, step.target, check=check)
    return blow_up(config, step, check=check)


def chain_order(config, anchor, members):
    """
    Order the curves ``members`` as a chain hanging from ``anchor``.

    Parameters
    ----------
    config: Configuration
        The configuration
    anchor: str
        A curve meeting exactly one of ``members``
    members: iterable of str
        The curves of the chain

    Returns
    -------
    list of str
    """
    members = set(members)
    if len(members) == 0:
        return []

    first = [x for x in config.neighbors(anchor) if x in members]
    if len(first) != 1:
        raise ConfigurationError(
            "expected one chain curve next to {}, found {}".format(anchor, first), name=anchor
        )

    order = first
    while len(order) < len(members):
        nxt = [x for x in config.neighbors(order[-1]) if x in members and x not in order]
        if len(nxt) != 1:
            raise ConfigurationError("the curves do not form a chain", name=order[-1])
        order.append(nxt[0])
    return order
