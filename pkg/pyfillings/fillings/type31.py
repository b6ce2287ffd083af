"""
Fillings of type (3,1)
======================

Tetrahedral, octahedral and icosahedral singularities whose resolution has
a branch made of a single -3 curve. The cusp configuration has a 0-curve
``A`` and a -1 curve ``B`` through the cusp of ``D``. Both are fibres of the
quadric through the cusp of a curve of bidegree (2,2), ``B`` being blown up
once away from the cusp. Two cases occur.

Case I
    The string is grown from ``D`` alone and ``B`` is blown up at a fresh
    point.

Case II
    The string contains a fibre ``C`` in the ruling of ``A``, meeting ``D``
    twice and ``B`` once. Growth keeps two contact points of ``D`` with the
    string, one of them on an end curve. Completion blows up the second
    contact point, on the ``j``-th curve, and the point where ``B`` meets
    ``C``, the ``i``-th curve. Before completion the -1 curves among the
    first ``i - 1`` curves sit at their ends.

Case II descriptors have ``c_i != 2`` when ``i > 1`` and ``c_j != 2`` when
``j < k``. The bound ``b <= max(5, c_{b-2})`` is not used to discard
descriptors: the search reports the ones that miss it with a warning.
"""
import logging
import warnings

import networkx as nx

from ..configuration import (
    BLOW_UP_AT_POINT,
    BLOW_UP_FRESH,
    ROLE_B,
    ROLE_D,
    ROLE_STRING,
    RewriteStep,
)
from ..cusp import SHAPE_TYPE31
from .descriptor import CASE_II, case2_violation
from .models import CUSP_QUADRIC_THREE_FIBRES_Q, CUSP_QUADRIC_TWO_FIBRES_Q
from .search import AnchoredChainSearch, is_path, path_ends, string_curves, string_graph

logger = logging.getLogger(__name__)

# the fibre of the ruling of A in the case II model
FIBRE = ROLE_STRING


class Type31Search(AnchoredChainSearch):
    shape = SHAPE_TYPE31
    models = [CUSP_QUADRIC_TWO_FIBRES_Q, CUSP_QUADRIC_THREE_FIBRES_Q]

    def growth_depth(self, model):
        if model == CUSP_QUADRIC_THREE_FIBRES_Q:
            return self.target.k - 1
        return self.target.k

    def dd_floor(self, model):
        # completion of case II blows up one more point of D
        if model == CUSP_QUADRIC_THREE_FIBRES_Q:
            return self.target.dd + 1
        return self.target.dd

    def is_growth_state(self, config, model):
        if model == CUSP_QUADRIC_TWO_FIBRES_Q:
            return super(Type31Search, self).is_growth_state(config, model)

        string = string_curves(config)
        G = string_graph(config, string)
        if not is_path(G):
            return False
        contacts = {x: config.intersection(ROLE_D, x) for x in string}
        if sum(contacts.values()) != 2:
            return False
        return any(contacts[x] > 0 for x in path_ends(G))

    def complete(self, model, config, steps):
        if model == CUSP_QUADRIC_TWO_FIBRES_Q:
            return self._complete_case1(model, config, steps)
        return self._complete_case2(model, config, steps)

    def _complete_case1(self, model, config, steps):
        steps = steps + [RewriteStep(BLOW_UP_FRESH, ROLE_B)]
        return super(Type31Search, self).complete(model, config, steps)

    def _complete_case2(self, model, config, steps):

        string = string_curves(config)
        G = string_graph(config, string)
        contacts = {x: config.intersection(ROLE_D, x) for x in string}

        e_point = [
            pid for pid, p in config.points.items() if ROLE_B in p.multiplicities and FIBRE in p.multiplicities
        ][0]

        out = []
        for first in path_ends(G):
            if contacts[first] == 0:
                continue

            order = list(nx.dfs_preorder_nodes(G, first))
            position = {x: n + 1 for n, x in enumerate(order)}
            marks = sorted(position[x] for x in order for _ in range(contacts[x]))
            i, j = position[FIBRE], marks[1]
            if i > j:
                continue

            # the curves before C_i come from points of C_i or D, so their
            # -1 curves sit at the ends of C_1, ..., C_(i-1)
            if i > 3 and any(config.weight(x) == -1 for x in order[1 : i - 2]):
                logger.debug("%s: inner -1 curve before C_%d", self.target.singularity, i)
                continue

            x_j = order[j - 1]
            # x_j meets D once, or it is the untouched fibre whose two points
            # on D are exchanged by a symmetry of the model
            f_point = sorted(
                pid
                for pid, p in config.points.items()
                if ROLE_D in p.multiplicities and x_j in p.multiplicities
            )[0]

            weights = [
                config.weight(x) - (position[x] == j) - (position[x] == i) for x in order
            ]
            more = [RewriteStep(BLOW_UP_AT_POINT, f_point), RewriteStep(BLOW_UP_AT_POINT, e_point)]

            for r in self.finish(model, config, steps + more, order, weights, config.weight(ROLE_D) - 1):
                if case2_violation(r.descriptor) in ("a", "b"):
                    logger.debug("%s: dropped %s", self.target.singularity, r.descriptor)
                    continue
                out.append(r)

        return out

    def realizations(self):
        found = super(Type31Search, self).realizations()
        for r in found:
            if r.descriptor.case == CASE_II and case2_violation(r.descriptor) == "c":
                warnings.warn(
                    "{} misses the bound b <= max(5, c_(b-2))".format(r.descriptor)
                )
        return found
