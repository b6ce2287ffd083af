"""
Verification of a single descriptor
===================================

A descriptor is checked against its singularity and, when it passes, a
witness is returned: the blow-ups turning a standard model into the
admissible configuration it names. The fresh blow-ups of ``D`` are left
out of the witness, they only lower ``D.D``.
"""
import warnings

from ..cusp import SHAPE_DIHEDRAL, SHAPE_TYPE31, shape_of, transform_target
from ..errors import FillingVerificationError
from .descriptor import CASE_II, case2_violation
from .search import replay


def _fail(d, constraint, message):
    raise FillingVerificationError("{}: {}".format(d, message), constraint=constraint)


def verify_filling(d, caps=None):
    """
    Check a descriptor and return a witness.

    Parameters
    ----------
    d: FillingDescriptor
        The descriptor
    caps: SearchCaps, optional
        Bounds of the search for a witness

    Returns
    -------
    list of RewriteStep
        The blow-ups from the standard model of ``d.base``, empty when the
        admissible configuration is the model itself

    Raises
    ------
    FillingVerificationError
        With ``constraint`` one of ``"dd-bound"``, ``"string-bound"``,
        ``"a"``, ``"b"``, ``"i<=j"``, ``"target"`` or ``"no-witness"``
    SearchCapsExhausted
        If the search for a witness runs out of resources
    """
    from . import searches

    shape = shape_of(d.singularity)

    bound = 8 if shape in (SHAPE_DIHEDRAL, SHAPE_TYPE31) else 9
    if d.dd > bound:
        _fail(d, "dd-bound", "D.D = {} exceeds {}".format(d.dd, bound))
    if any(w > -1 for w in d.string):
        _fail(d, "string-bound", "string weights are at most -1")

    if (d.case is not None) != (shape == SHAPE_TYPE31):
        _fail(d, "target", "case {} for a {} singularity".format(d.case, shape))
    if d.case == CASE_II:
        violated = case2_violation(d)
        if violated == "c":
            warnings.warn("{} misses the bound b <= max(5, c_(b-2))".format(d))
        elif violated is not None:
            _fail(d, violated, "case II constraint {} fails".format(violated))

    target = transform_target(d.singularity)
    if d.dd != target.dd or d.string != target.string:
        _fail(
            d,
            "target",
            "the cusp configuration has D.D = {} and string {}".format(target.dd, list(target.string)),
        )

    search = searches[shape](target, caps=caps)
    for r in search.realizations():
        if r.descriptor == d:
            # the witness replays on its own, without the fresh blow-ups of D
            replay(r.model, r.steps)
            return list(r.steps)

    _fail(d, "no-witness", "no admissible configuration realizes it")

