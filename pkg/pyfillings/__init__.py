"""
pyfillings
==========

Provides
  1. Hirzebruch-Jung continued fractions and the resolution graphs of the
     quotient surface singularities
  2. Compactifying divisors and their cusp transformations
  3. A configuration engine for rational curves under blow-ups and
     blow-downs, with exact intersection lattices
  4. The enumeration of the minimal symplectic fillings of the links of

    * cyclic quotient singularities
    * dihedral singularities
    * tetrahedral, octahedral and icosahedral singularities

The docstring examples assume that `pyfillings` has been imported as `pf`::

  >>> import pyfillings as pf
  >>> pf.hj_expand(19, 7)
  HJExpansion([3, 4, 2])
  >>> [str(d) for d in pf.enumerate_fillings("T:7")]
  ['(T:7;5,-4;3x1) P2']

Available submodules
---------------------
:py:obj:`pyfillings.hj_fractions`
    Hirzebruch-Jung continued fractions and their duals.

:py:obj:`pyfillings.lattice`
    Intersection lattices of blow-ups of the projective plane and the quadric.

:py:obj:`pyfillings.catalog`
    Singularity identifiers, resolution graphs and compactifying divisors.

:py:obj:`pyfillings.configuration`
    Curve configurations and the blow-up and blow-down rewrites.

:py:obj:`pyfillings.cusp`
    Cusp transformations of the compactifying divisors.

:py:obj:`pyfillings.canonical`
    Isomorphism classes of configurations.

:py:obj:`pyfillings.golden`
    The expected lists of fillings.

:py:obj:`pyfillings.parameters`
    Search caps and catalog data.

:py:obj:`pyfillings.utilities`
    DOT export and canonical JSON.

Available subpackages
---------------------

:py:obj:`pyfillings.fillings`
    Enumeration and verification of minimal symplectic fillings

Utilities
---------
__version__
    pyfillings version string

"""

from . import fillings
from .canonical import *
from .catalog import *
from .configuration import *
from .cusp import *
from .errors import *
from .fillings import enumerate_fillings, verify_filling
from .fillings.descriptor import FillingDescriptor
from .fillings.models import standard_model, standard_models
from .fillings.search import SearchCaps
from .hj_fractions import *
from .lattice import *
from .parameters import *
from .utilities import *
from .version import __version__
