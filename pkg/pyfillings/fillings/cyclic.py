"""
Fillings of cyclic quotient singularities
=========================================

The compactifying divisor is a chain ``L, C1, ..., Ck`` with ``L.L = 1``.
The fillings come from blow-ups of two lines in the projective plane, where
the line ``L`` and the point it shares with ``C1`` are never blown up.
"""
from ..configuration import ROLE_L
from ..cusp import SHAPE_CYCLIC
from .models import TWO_LINES_P2
from .search import AnchoredChainSearch


class CyclicSearch(AnchoredChainSearch):
    """
    Fillings of a cyclic quotient singularity ``A:n,q``.

    The string starts as the line ``C1``, so ``k - 1`` blow-ups grow it to
    ``k`` curves.
    """

    shape = SHAPE_CYCLIC
    models = [TWO_LINES_P2]
    anchor = ROLE_L

    def growth_depth(self, model):
        return self.target.k - 1

    def keep_extra(self, model):
        return False
