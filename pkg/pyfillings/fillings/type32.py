"""
Fillings of type (3,2)
======================

Tetrahedral, octahedral and icosahedral singularities whose resolution has
a branch of two -2 curves. The cusp configuration is ``D`` with a string,
realized from a cuspidal cubic in the projective plane or a cuspidal curve
of bidegree (2,2) in the quadric. On the quadric the string is grown with
no fresh blow-up of ``D``.
"""
from ..cusp import SHAPE_TYPE32
from .models import CUSP_CUBIC_P2, CUSP_QUADRIC_Q, model_bases
from .search import AnchoredChainSearch


class Type32Search(AnchoredChainSearch):
    shape = SHAPE_TYPE32
    models = [CUSP_CUBIC_P2, CUSP_QUADRIC_Q]

    def keep_extra(self, model):
        return model_bases[model] == "P2"
