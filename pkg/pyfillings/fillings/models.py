"""
Standard models
===============

Every admissible configuration is an iterated blow-up of one of a few
configurations of rational curves in the projective plane or in the quadric.

================================  ======  ==================================================
name                              base    curves
================================  ======  ==================================================
``TwoLines_P2``                   ``P2``  two lines ``L`` and ``C1``
``CuspCubic_P2``                  ``P2``  a cuspidal cubic ``D``
``CuspQuadric_Q``                 ``Q``   a cuspidal curve ``D`` of bidegree (2,2)
``CuspQuadricOneFibre_Q``         ``Q``   ``D`` and a fibre ``A`` through the cusp
``CuspCubicPlusLine_blownP2``     ``P2``  ``D = 3h - e1`` and ``A = h - e1`` through the cusp
``CuspQuadricTwoFibres_Q``        ``Q``   ``D`` and fibres ``A``, ``B`` through the cusp
``CuspQuadricThreeFibres_Q``      ``Q``   as above plus a fibre ``C`` of the ruling of ``A``
================================  ======  ==================================================

The cusp point is named ``cusp``, the other marked points ``x1, x2, ...``.
"""
from ..configuration import (
    ROLE_A,
    ROLE_B,
    ROLE_D,
    ROLE_L,
    ROLE_STRING,
    Configuration,
    Curve,
    Point,
)
from ..errors import DomainError
from ..lattice import CUSPIDAL, AmbientLattice, fibre_class, line_class

TWO_LINES_P2 = "TwoLines_P2"
CUSP_CUBIC_P2 = "CuspCubic_P2"
CUSP_QUADRIC_Q = "CuspQuadric_Q"
CUSP_QUADRIC_ONE_FIBRE_Q = "CuspQuadricOneFibre_Q"
CUSP_CUBIC_PLUS_LINE_BLOWN_P2 = "CuspCubicPlusLine_blownP2"
CUSP_QUADRIC_TWO_FIBRES_Q = "CuspQuadricTwoFibres_Q"
CUSP_QUADRIC_THREE_FIBRES_Q = "CuspQuadricThreeFibres_Q"

# base of each model, as it appears in the descriptors
model_bases = {
    TWO_LINES_P2: "P2",
    CUSP_CUBIC_P2: "P2",
    CUSP_QUADRIC_Q: "Q",
    CUSP_QUADRIC_ONE_FIBRE_Q: "Q",
    CUSP_CUBIC_PLUS_LINE_BLOWN_P2: "P2",
    CUSP_QUADRIC_TWO_FIBRES_Q: "Q",
    CUSP_QUADRIC_THREE_FIBRES_Q: "Q",
}


def _pair(x, y):
    return frozenset((x, y))


def _two_lines():
    lat = AmbientLattice.projective_plane()
    curves = [
        Curve(ROLE_L, line_class(lat), role=ROLE_L),
        Curve("C1", line_class(lat), role=ROLE_STRING),
    ]
    return Configuration(lat, curves, [Point("x1", {ROLE_L: 1, "C1": 1})])


def _cusp_alone(lat, D):
    curves = [Curve(ROLE_D, D, role=ROLE_D)]
    return Configuration(lat, curves, [Point("cusp", {ROLE_D: 2})])


def _cusp_cubic():
    lat = AmbientLattice.projective_plane()
    return _cusp_alone(lat, line_class(lat, 3, kind=CUSPIDAL))


def _cusp_quadric():
    lat = AmbientLattice.quadric()
    return _cusp_alone(lat, lat.element(f1=2, f2=2, kind=CUSPIDAL))


def _with_fibres(lat, D, fibres):
    """``D`` and curves through its cusp meeting it with local intersection 2"""
    curves = [Curve(ROLE_D, D, role=ROLE_D)]
    mult = {ROLE_D: 2}
    local = {}
    for name, c in fibres:
        curves.append(Curve(name, c, role=name))
        mult[name] = 1
        local[_pair(ROLE_D, name)] = 2
    # fibres of different rulings meet once at the cusp
    for (x, _), (y, _) in zip(fibres[:-1], fibres[1:]):
        local[_pair(x, y)] = 1
    return curves, Point("cusp", mult, local)


def _one_fibre():
    lat = AmbientLattice.quadric()
    D = lat.element(f1=2, f2=2, kind=CUSPIDAL)
    curves, cusp = _with_fibres(lat, D, [(ROLE_A, fibre_class(lat, 1))])
    return Configuration(lat, curves, [cusp])


def _cubic_plus_line():
    lat = AmbientLattice.projective_plane(1)
    D = lat.element(h=3, e1=-1, kind=CUSPIDAL)
    curves, cusp = _with_fibres(lat, D, [(ROLE_A, lat.element(h=1, e1=-1))])
    return Configuration(lat, curves, [cusp])


def _two_fibres():
    lat = AmbientLattice.quadric()
    D = lat.element(f1=2, f2=2, kind=CUSPIDAL)
    curves, cusp = _with_fibres(
        lat, D, [(ROLE_A, fibre_class(lat, 1)), (ROLE_B, fibre_class(lat, 2))]
    )
    return Configuration(lat, curves, [cusp])


def _three_fibres():
    config = _two_fibres()
    lat = config.lattice
    curves = list(config.curves.values()) + [Curve("C", fibre_class(lat, 1), role=ROLE_STRING)]
    points = list(config.points.values()) + [
        Point("x1", {ROLE_D: 1, "C": 1}),
        Point("x2", {ROLE_D: 1, "C": 1}),
        Point("x3", {ROLE_B: 1, "C": 1}),
    ]
    return Configuration(lat, curves, points)


_builders = {
    TWO_LINES_P2: _two_lines,
    CUSP_CUBIC_P2: _cusp_cubic,
    CUSP_QUADRIC_Q: _cusp_quadric,
    CUSP_QUADRIC_ONE_FIBRE_Q: _one_fibre,
    CUSP_CUBIC_PLUS_LINE_BLOWN_P2: _cubic_plus_line,
    CUSP_QUADRIC_TWO_FIBRES_Q: _two_fibres,
    CUSP_QUADRIC_THREE_FIBRES_Q: _three_fibres,
}

standard_models = list(_builders)


def standard_model(name):
    """
    Build a standard model.

    Parameters
    ----------
    name: str
        One of :py:data:`standard_models`

    Returns
    -------
    Configuration
        A fresh configuration, checked for coherence
    """
    try:
        config = _builders[name]()
    except KeyError:
        raise DomainError("Unknown standard model {!r}".format(name))
    config.check()
    return config
