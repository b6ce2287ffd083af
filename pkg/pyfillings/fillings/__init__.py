"""
Minimal Symplectic Fillings
===========================

This sub-package enumerates the minimal symplectic fillings of the link of a
quotient surface singularity. Each filling is named by a
:py:obj:`pyfillings.fillings.descriptor.FillingDescriptor` read from an
admissible configuration of curves in a blow-up of the projective plane or
of the quadric.

Cyclic
    | Two lines in the projective plane
    | :py:obj:`pyfillings.fillings.cyclic`
Dihedral
    | A cuspidal curve with a 0-curve through its cusp
    | :py:obj:`pyfillings.fillings.dihedral`
Type (3,2)
    | A cuspidal cubic or a cuspidal curve of the quadric
    | :py:obj:`pyfillings.fillings.type32`
Type (3,1)
    | A cuspidal curve of the quadric with two fibres through its cusp
    | :py:obj:`pyfillings.fillings.type31`

All these classes derive from the abstract base class
:py:obj:`pyfillings.fillings.search.FillingSearch`.

How to use the fillings module
------------------------------

    >>> for d in pyfillings.enumerate_fillings("T:19"):
    ...     print(d)

A single descriptor is checked with :py:func:`verify_filling`, which returns
the blow-ups realizing it.

Utilities
---------

:py:obj:`pyfillings.fillings.searches`
    a dictionary containing the search classes indexed by shape
    ``['cyclic', 'dihedral', 'type32', 'type31']``
:py:obj:`pyfillings.fillings.models`
    the standard models the searches start from
"""
import logging

from ..catalog import parse_singularity
from ..cusp import SHAPE_CYCLIC, SHAPE_DIHEDRAL, SHAPE_TYPE31, SHAPE_TYPE32, shape_of, transform_target
from ..errors import DomainError
from .descriptor import *
from .models import *
from .search import *
from .cyclic import *
from .dihedral import *
from .type32 import *
from .type31 import *
from .verify import *

logger = logging.getLogger(__name__)

# Create this dictionary as a shortcut to the different searches
searches = {
    SHAPE_CYCLIC: CyclicSearch,
    SHAPE_DIHEDRAL: DihedralSearch,
    SHAPE_TYPE32: Type32Search,
    SHAPE_TYPE31: Type31Search,
}


def enumerate_fillings(s, caps=None, base=None):
    """
    All the minimal fillings of a singularity.

    Parameters
    ----------
    s: SingularityId or str
        The singularity, e.g. ``"T:19"`` or ``"A:7,3"``
    caps: SearchCaps, optional
        Bounds of the search
    base: str, optional
        Only keep the descriptors on this base, ``"P2"`` or ``"Q"``

    Returns
    -------
    list of FillingDescriptor
        Sorted, without duplicates

    Raises
    ------
    SearchCapsExhausted
        If the search does not finish within the caps
    """
    s = parse_singularity(s)
    if base is not None and base not in bases:
        raise DomainError("Unknown base {!r}".format(base))

    target = transform_target(s)
    logger.info("%s: %r", s, target)

    found = searches[shape_of(s)](target, caps=caps).run()
    if base is not None:
        found = [d for d in found if d.base == base]
    return found
