"""
Search framework
================

The fillings of a singularity are found by a forward search. Starting from
a standard model, curves are blown up until the curves that are not part of
the frame (``L``, ``A``, ``B``, ``D``) form a chain with as many curves as
the target string. This is the *growth* phase, a breadth-first search where
states isomorphic to an already visited one are dropped.

Each grown state is then *completed*: the string is ordered from ``D`` (or
from ``L``), the remaining drop of self-intersection of every string curve
is realized by blowing up fresh points of that curve, and the excess of
``D.D`` by blowing up fresh points of ``D``. The latter blow-ups produce -1
curves meeting only ``D``; they are not recorded in the descriptor.

A completed state is replayed from the model with every invariant checked,
and its descriptor is read back from the final configuration.

Every search is bounded by :py:class:`SearchCaps`. When a bound is reached
:py:class:`~pyfillings.errors.SearchCapsExhausted` is raised, a partial
list is never returned.
"""
import abc
import itertools
import logging
import time

import networkx as nx

from ..canonical import ConfigurationIndex
from ..configuration import (
    BLOW_UP_AT_POINT,
    BLOW_UP_FRESH,
    ROLE_A,
    ROLE_B,
    ROLE_D,
    ROLE_L,
    RewriteStep,
    apply_step,
    chain_order,
    frame_roles,
)
from ..cusp import SHAPE_CYCLIC, SHAPE_TYPE31, shape_of
from ..errors import ConfigurationError, DomainError, SearchCapsExhausted
from ..lattice import EMBEDDED
from ..parameters import constants
from .descriptor import CASE_I, CASE_II, FillingDescriptor
from .models import model_bases, standard_model

logger = logging.getLogger(__name__)


class SearchCaps(object):
    """
    Resource bounds of a search.

    Parameters
    ----------
    max_blowups: int, optional
        Maximum number of blow-ups of a single realization. By default the
        bound :py:func:`blowup_bound` of the target, never more than the
        ``max_blowups`` constant
    max_solutions: int, optional
        Maximum number of descriptors, default from the constants
    time_budget: float, optional
        Maximum time in seconds, default from the constants
    """

    def __init__(self, max_blowups=None, max_solutions=None, time_budget=None):

        for name, val in [
            ("max_blowups", max_blowups),
            ("max_solutions", max_solutions),
            ("time_budget", time_budget),
        ]:
            if val is not None and val <= 0:
                raise DomainError("The search cap {} should be positive, got {}".format(name, val))

        self.max_blowups = max_blowups
        self.max_solutions = max_solutions
        self.time_budget = time_budget

    def resolved(self, target):
        """The caps with every default filled in for a target"""
        max_blowups = self.max_blowups
        if max_blowups is None:
            max_blowups = min(blowup_bound(target), constants.get("max_blowups"))
        max_solutions = self.max_solutions
        if max_solutions is None:
            max_solutions = constants.get("max_solutions")
        time_budget = self.time_budget
        if time_budget is None:
            time_budget = constants.get("time_budget")
        return SearchCaps(max_blowups, max_solutions, time_budget)

    def to_dict(self):
        return {
            "max_blowups": self.max_blowups,
            "max_solutions": self.max_solutions,
            "time_budget": self.time_budget,
        }

    def __repr__(self):
        return "SearchCaps({max_blowups}, {max_solutions}, {time_budget})".format(**self.to_dict())


def blowup_bound(target):
    """
    Number of blow-ups sufficient for any realization of a target.

    Every blow-up lowers the total self-intersection of the tracked curves
    by at least one: the string curves start at weight at most 1 and end at
    ``-ci``, ``D`` starts at most at 9. The slack constant is added on top.
    """
    drop = sum(1 - w for w in target.string)
    if target.shape != SHAPE_CYCLIC:
        drop += 9 - target.dd
    return target.k + drop + constants.get("blowup_slack")


class Realization(object):
    """
    A realization of a descriptor.

    Attributes
    ----------
    descriptor: FillingDescriptor
    model: str
        Name of the standard model
    steps: list of RewriteStep
        The blow-ups producing the admissible configuration
    extra: list of RewriteStep
        The blow-ups of fresh points of ``D`` completing it
    configuration: Configuration
        The final configuration, after ``steps`` and ``extra``
    """

    def __init__(self, descriptor, model, steps, extra, configuration):
        self.descriptor = descriptor
        self.model = model
        self.steps = list(steps)
        self.extra = list(extra)
        self.configuration = configuration

    @property
    def blowups(self):
        return len(self.steps) + len(self.extra)

    def __repr__(self):
        return "Realization({}, {}, {} steps)".format(self.descriptor, self.model, len(self.steps))


def string_curves(config):
    """Curves that are not part of the frame"""
    return [x for x, c in config.curves.items() if c.role not in frame_roles]


def string_graph(config, members):
    """The graph of intersections among ``members``, None if two of them meet more than once"""
    names, M = config.intersection_matrix()
    index = {x: i for i, x in enumerate(names)}
    G = nx.Graph()
    G.add_nodes_from(members)
    for a in range(len(members)):
        for b in range(a + 1, len(members)):
            v = M[index[members[a]], index[members[b]]]
            if v > 1:
                return None
            if v == 1:
                G.add_edge(members[a], members[b])
    return G


def is_path(G):
    """True if the graph is a simple path"""
    if G is None:
        return False
    n = G.number_of_nodes()
    if n == 0:
        return True
    return (
        nx.is_connected(G)
        and G.number_of_edges() == n - 1
        and all(d <= 2 for _, d in G.degree())
    )


def path_ends(G):
    if G.number_of_nodes() == 1:
        return list(G.nodes)
    return [x for x, d in G.degree() if d == 1]


def attachment_steps(order, weights, targets):
    """
    Fresh blow-ups bringing every string curve to its target weight.

    Returns
    -------
    list of RewriteStep or None
        None if some curve is already below its target
    """
    steps = []
    for x, w, t in zip(order, weights, targets):
        if w < t:
            return None
        steps += [RewriteStep(BLOW_UP_FRESH, x) for _ in range(w - t)]
    return steps


def check_disjoint(config, names):
    """
    Check that the -1 curves among ``names`` are pairwise disjoint.

    Raises
    ------
    ConfigurationError
        Naming one of two -1 curves that meet
    """
    minus_one = [x for x in names if config.weight(x) == -1 and config.kind(x) == EMBEDDED]
    for a, b in itertools.combinations(minus_one, 2):
        if config.intersection(a, b) != 0:
            raise ConfigurationError("two -1 curves meet: {} and {}".format(a, b), name=a)


def replay(model, steps, check=True):
    """
    Replay rewrite steps from a standard model.

    Every intermediate configuration is checked for coherence and adjunction,
    ``D.D`` stays within the bound of its model and the -1 curves created
    by the blow-ups are pairwise disjoint.

    Parameters
    ----------
    model: str
        Name of the standard model
    steps: list of RewriteStep
    check: bool, optional
        Check every intermediate state (default True)

    Returns
    -------
    Configuration
    """
    config = standard_model(model)
    model_curves = set(config.curves)
    bound = 8 if ROLE_A in config.curves or model_bases[model] == "Q" else 9
    for step in steps:
        config = apply_step(config, step, check=check)
        if ROLE_D in config.curves and config.weight(ROLE_D) > bound:
            raise ConfigurationError("D.D exceeds {}".format(bound), name=ROLE_D)
        if check:
            check_disjoint(config, [x for x in config.curves if x not in model_curves])
    return config


def read_descriptor(config, singularity, base, shape=None):
    """
    Read the descriptor of a completed configuration.

    The string is made of the curves outside the frame of weight at most -2,
    the other curves outside the frame are -1 curves and must be pairwise
    disjoint. A -1 curve meeting a single string curve is an attachment, a
    -1 curve meeting only ``D`` is ignored. In case I a -1 curve meets only
    ``B``; in case II one meets ``B`` and the ``i``-th string curve, another
    one meets ``D`` and the ``j``-th string curve.

    Parameters
    ----------
    config: Configuration
    singularity: SingularityId
    base: str
        ``"P2"`` or ``"Q"``
    shape: str, optional
        The shape of the singularity, derived from it by default

    Returns
    -------
    descriptor: FillingDescriptor
    t: int
        The number of -1 curves meeting only ``D``
    """
    if shape is None:
        shape = shape_of(singularity)

    outside = string_curves(config)
    residual = []
    string = []
    for x in outside:
        w = config.weight(x)
        if w == -1 and config.kind(x) == EMBEDDED:
            residual.append(x)
        elif w <= -2:
            string.append(x)
        else:
            raise ConfigurationError("curve of weight {} outside the frame".format(w), name=x)

    anchor = ROLE_L if shape == SHAPE_CYCLIC else ROLE_D
    order = chain_order(config, anchor, string)
    G = string_graph(config, order)
    if not is_path(G) or any(not G.has_edge(x, y) for x, y in zip(order[:-1], order[1:])):
        raise ConfigurationError("the string is not a chain")
    if len(order) > 0 and config.intersection(anchor, order[0]) != 1:
        raise ConfigurationError("{} meets the string more than once".format(anchor), name=anchor)

    position = {x: i + 1 for i, x in enumerate(order)}

    check_disjoint(config, residual)

    attachments = []
    t = 0
    e_curve = None
    f_curve = None
    for r in residual:
        meets = sorted(config.neighbors(r))
        if any(config.intersection(r, x) != 1 for x in meets):
            raise ConfigurationError("-1 curve meeting a curve more than once", name=r)
        on_string = [x for x in meets if x in position]
        others = [x for x in meets if x not in position]

        if len(on_string) == 1 and len(others) == 0:
            attachments.append((1, position[on_string[0]]))
        elif len(on_string) == 0 and others == [ROLE_D]:
            t += 1
        elif others == [ROLE_B] and len(on_string) <= 1 and e_curve is None:
            e_curve = on_string
        elif others == [ROLE_D] and len(on_string) == 1 and f_curve is None:
            f_curve = on_string
        else:
            raise ConfigurationError("-1 curve meeting {}".format(meets), name=r)

    case, ij = None, None
    if shape == SHAPE_TYPE31:
        if e_curve == [] and f_curve is None:
            case = CASE_I
        elif e_curve is not None and len(e_curve) == 1 and f_curve is not None:
            case = CASE_II
            ij = (position[e_curve[0]], position[f_curve[0]])
        else:
            raise ConfigurationError("no -1 curve through B of a recognized case", name=ROLE_B)
        if config.weight(ROLE_B) != -1:
            raise ConfigurationError("B is not a -1 curve", name=ROLE_B)
    elif e_curve is not None or f_curve is not None:
        raise ConfigurationError("-1 curve of a type (3,1) configuration")

    if ROLE_A in config.curves and config.weight(ROLE_A) != 0:
        raise ConfigurationError("A is not a 0-curve", name=ROLE_A)

    dd = config.weight(anchor)
    weights = [config.weight(x) for x in order]
    descriptor = FillingDescriptor(
        singularity, dd, weights, attachments=attachments, case=case, ij=ij, base=base
    )
    return descriptor, t


class FillingSearch(abc.ABC):
    """
    Abstract forward search for the fillings of one shape.

    Subclasses set :py:attr:`shape` and :py:attr:`models`, and implement
    :py:meth:`is_growth_state` and :py:meth:`complete`.

    Parameters
    ----------
    target: CuspTarget
        What to realize
    caps: SearchCaps, optional
        Resource bounds
    """

    shape = None
    models = []
    # roles of the curves that are never blown up
    protected = [ROLE_L, ROLE_A, ROLE_B]

    def __init__(self, target, caps=None):
        if target.shape != self.shape:
            raise DomainError("A {} search got a {} target".format(self.shape, target.shape))
        self.target = target
        self.caps = (caps if caps is not None else SearchCaps()).resolved(target)
        self._start = None

    def growth_depth(self, model):
        """Number of blow-ups of the growth phase"""
        return self.target.k

    def dd_floor(self, model):
        """Lowest value of ``D.D`` a grown state may have"""
        return self.target.dd

    def moves(self, config):
        """The blow-ups allowed from a state"""
        steps = []
        for pid, p in config.points.items():
            if p.cusp or any(config.role(x) in self.protected for x in p.multiplicities):
                continue
            steps.append(RewriteStep(BLOW_UP_AT_POINT, pid))
        for x, c in config.curves.items():
            if c.role not in self.protected:
                steps.append(RewriteStep(BLOW_UP_FRESH, x))
        return steps

    def pruned(self, config, model):
        """True if no completion of the state can reach the target"""
        string = string_curves(config)
        if len(string) > self.target.k:
            return True
        floor = min(self.target.string) if self.target.k > 0 else None
        for x in string:
            if floor is not None and config.weight(x) < floor:
                return True
        if ROLE_D in config.curves and config.weight(ROLE_D) < self.dd_floor(model):
            return True
        return False

    @abc.abstractmethod
    def is_growth_state(self, config, model):
        """Shape of the curves outside the frame during growth"""
        return

    @abc.abstractmethod
    def complete(self, model, config, steps):
        """
        Complete a grown state.

        Returns
        -------
        list of Realization
        """
        return

    def _check_time(self):
        if time.perf_counter() - self._start > self.caps.time_budget:
            raise SearchCapsExhausted(
                "The search for {} ran out of its time budget of {} s".format(
                    self.target.singularity, self.caps.time_budget
                ),
                caps=self.caps,
            )

    def grow(self, model):
        """
        Breadth-first growth from a standard model.

        Returns
        -------
        list of (Configuration, list of RewriteStep)
            The grown states, one per isomorphism class
        """
        depth = self.growth_depth(model)
        if depth < 0:
            return []
        if depth > self.caps.max_blowups:
            raise SearchCapsExhausted(
                "{} needs {} blow-ups to grow its string, above the cap of {}".format(
                    self.target.singularity, depth, self.caps.max_blowups
                ),
                caps=self.caps,
            )

        start = standard_model(model)
        index = ConfigurationIndex()
        index.add(start)
        frontier = [(start, [])]

        for level in range(depth):
            grown = []
            for config, steps in frontier:
                self._check_time()
                for step in self.moves(config):
                    try:
                        new = apply_step(config, step, check=False)
                    except ConfigurationError:
                        continue
                    if self.pruned(new, model) or not self.is_growth_state(new, model):
                        continue
                    if index.add(new):
                        grown.append((new, steps + [step]))
            frontier = grown
            logger.debug(
                "%s %s: level %d, %d states", self.target.singularity, model, level + 1, len(frontier)
            )

        return [(c, s) for c, s in frontier if self.is_growth_state(c, model)]

    def realize(self, model, steps, extra):
        """
        Replay a completed state and read its descriptor.

        Returns
        -------
        Realization
        """
        config = replay(model, steps + extra)
        descriptor, t = read_descriptor(
            config, self.target.singularity, model_bases[model], self.shape
        )
        if t != len(extra) or descriptor.dd != self.target.dd or descriptor.string != self.target.string:
            raise ConfigurationError(
                "completed configuration {} does not match the target {}".format(descriptor, self.target)
            )
        return Realization(descriptor, model, steps, extra, config)

    def realizations(self):
        """
        All realizations, one per descriptor.

        Returns
        -------
        list of Realization
            Sorted by descriptor
        """
        self._start = time.perf_counter()
        found = {}

        for model in self.models:
            states = self.grow(model)
            logger.info(
                "%s: %d grown states from %s", self.target.singularity, len(states), model
            )
            for config, steps in states:
                self._check_time()
                for r in self.complete(model, config, steps):
                    if r.blowups > self.caps.max_blowups:
                        raise SearchCapsExhausted(
                            "{} needs {} blow-ups, above the cap of {}".format(
                                r.descriptor, r.blowups, self.caps.max_blowups
                            ),
                            caps=self.caps,
                        )
                    if r.descriptor not in found:
                        found[r.descriptor] = r
                    if len(found) > self.caps.max_solutions:
                        raise SearchCapsExhausted(
                            "{} has more than {} fillings".format(
                                self.target.singularity, self.caps.max_solutions
                            ),
                            caps=self.caps,
                        )

        logger.info("%s: %d descriptors", self.target.singularity, len(found))
        return [found[d] for d in sorted(found)]

    def run(self):
        """The sorted list of descriptors"""
        return [r.descriptor for r in self.realizations()]


class AnchoredChainSearch(FillingSearch):
    """
    Search where the string hangs from a single curve of the frame.

    The string meets the anchor once, at one of its ends. Completion adds
    the attachments and lowers ``D.D`` to its target with fresh blow-ups.
    """

    anchor = ROLE_D

    def keep_extra(self, model):
        """True if fresh blow-ups of ``D`` are allowed on this model"""
        return True

    def is_growth_state(self, config, model):
        string = string_curves(config)
        G = string_graph(config, string)
        if not is_path(G):
            return False
        if len(string) == 0:
            return True
        touching = [x for x in string if config.intersection(self.anchor, x) > 0]
        return (
            len(touching) == 1
            and config.intersection(self.anchor, touching[0]) == 1
            and touching[0] in path_ends(G)
        )

    def complete(self, model, config, steps):
        order = chain_order(config, self.anchor, string_curves(config))
        weights = [config.weight(x) for x in order]
        return self.finish(model, config, steps, order, weights, config.weight(self.anchor))

    def finish(self, model, config, steps, order, weights, dd):
        """
        Add the attachments and the fresh blow-ups of ``D``.

        Parameters
        ----------
        model: str
        config: Configuration
            The grown state
        steps: list of RewriteStep
            The steps from the model, including any case specific ones
        order: list of str
            The string, from the anchor
        weights: list of int
            The weights of ``order`` after ``steps``
        dd: int
            The self-intersection of the anchor after ``steps``

        Returns
        -------
        list of Realization
        """
        attach = attachment_steps(order, weights, self.target.string)
        if attach is None:
            return []
        t = dd - self.target.dd
        if t < 0 or (t > 0 and not self.keep_extra(model)):
            return []
        extra = [RewriteStep(BLOW_UP_FRESH, ROLE_D) for _ in range(t)]
        return [self.realize(model, steps + attach, extra)]
