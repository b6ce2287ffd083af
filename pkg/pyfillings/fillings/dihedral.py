"""
Fillings of dihedral singularities
==================================

After the cusp transformation, a 0-curve ``A`` meets ``D`` at its cusp.
Two models carry such a pair: a fibre through the cusp of a cuspidal curve
of bidegree (2,2) in the quadric, and a line through the cusp of a
cuspidal cubic in the projective plane blown up at a point of the line.
On the quadric no fresh point of ``D`` is blown up.
"""
from ..cusp import SHAPE_DIHEDRAL
from .models import CUSP_CUBIC_PLUS_LINE_BLOWN_P2, CUSP_QUADRIC_ONE_FIBRE_Q
from .search import AnchoredChainSearch


class DihedralSearch(AnchoredChainSearch):
    shape = SHAPE_DIHEDRAL
    models = [CUSP_QUADRIC_ONE_FIBRE_Q, CUSP_CUBIC_PLUS_LINE_BLOWN_P2]

    def keep_extra(self, model):
        return model == CUSP_CUBIC_PLUS_LINE_BLOWN_P2
