"""
Cusp transformations
====================

The compactifying divisor of a dihedral, tetrahedral, octahedral or
icosahedral singularity is turned into a configuration containing a
cuspidal rational curve ``D`` by a short, fixed sequence of blow-downs and
blow-ups starting from the normalized divisor. The sequences are stored in
``data/catalog.json``, one per shape:

* ``dihedral``: a 0-curve ``A`` through the cusp of ``D`` and a string
* ``type32``: ``D`` and a string
* ``type31``: a 0-curve ``A`` and a -1 curve ``B`` through the cusp of ``D``,
  and a string

In every case the string is the rest of the third arm. After the
transformation the curves are renamed ``D``, ``A``, ``B`` and ``C1, ..., Ck``
with ``C1`` the string curve that meets ``D``.
"""
import logging

from .catalog import (
    CYCLIC,
    DIHEDRAL,
    TYPE31,
    classify_type,
    compactifying_divisor,
    head_vertex,
    normalized_divisor,
    parse_singularity,
)
from .configuration import (
    ROLE_A,
    ROLE_B,
    ROLE_D,
    ROLE_L,
    ROLE_STRING,
    Configuration,
    RewriteStep,
    apply_step,
    chain_order,
)
from .errors import ConfigurationError, DomainError
from .lattice import CUSPIDAL
from .parameters import transform_steps

logger = logging.getLogger(__name__)

SHAPE_CYCLIC = "cyclic"
SHAPE_DIHEDRAL = "dihedral"
SHAPE_TYPE32 = "type32"
SHAPE_TYPE31 = "type31"

shapes = [SHAPE_CYCLIC, SHAPE_DIHEDRAL, SHAPE_TYPE32, SHAPE_TYPE31]


def shape_of(s):
    """
    The shape of the cusp configuration of a singularity.

    Tetrahedral singularities with both branches are handled as type (3,2).
    """
    s = parse_singularity(s)
    if s.family == CYCLIC:
        return SHAPE_CYCLIC
    if s.family == DIHEDRAL:
        return SHAPE_DIHEDRAL
    return SHAPE_TYPE31 if classify_type(s) == TYPE31 else SHAPE_TYPE32


def _resolve(token, graph, created):
    if token == "head":
        return head_vertex(graph)
    if token in created or token in graph:
        return token
    raise ConfigurationError("unknown curve in transformation", name=token)


def cusp_transform(s, trace=False):
    """
    Transform the compactifying divisor into a cusp configuration.

    Parameters
    ----------
    s: SingularityId or str
        A dihedral, tetrahedral, octahedral or icosahedral singularity
    trace: bool, optional
        Also return the intermediate configurations (default False)

    Returns
    -------
    config: Configuration
        The cusp configuration with curves ``D``, ``A``, ``B`` (when present)
        and ``C1, ..., Ck``
    history: list of (RewriteStep, Configuration)
        Only when ``trace`` is True, the steps with the configuration
        obtained after each of them
    """
    s = parse_singularity(s)
    shape = shape_of(s)
    if shape == SHAPE_CYCLIC:
        raise DomainError("Cyclic singularities need no cusp transformation")

    graph = normalized_divisor(s)
    config = Configuration.from_graph(graph)
    config.check()

    created = set()
    history = []
    for data in transform_steps[shape]["steps"]:
        kind, token = data[0], data[1]
        new_name = data[2] if len(data) > 2 else None
        step = RewriteStep(kind, _resolve(token, graph, created), new_name)
        config = apply_step(config, step)
        if new_name is not None:
            created.add(new_name)
        history.append((step, config))
        logger.debug("%s: %s -> %r", s, step, config)

    frame = {
        role: _resolve(token, graph, created)
        for role, token in transform_steps[shape]["roles"].items()
    }
    string = [x for x in config.curves if x not in frame.values()]
    order = chain_order(config, frame[ROLE_D], string)

    mapping = {name: role for role, name in frame.items()}
    mapping.update({x: "C{}".format(i + 1) for i, x in enumerate(order)})
    roles = {x: x if x in frame else ROLE_STRING for x in mapping.values()}
    config = config.renamed(mapping).with_roles(roles)

    check_cusp_shape(config, shape)

    if trace:
        return config, history
    return config


def check_cusp_shape(config, shape):
    """
    Verify that a cusp configuration has the expected shape.

    ``D`` is cuspidal, ``D.D <= 9`` and ``D.D <= 8`` when a 0-curve meets
    the cusp, the string curves have weight at most -1 and form a chain
    hanging from ``D``, ``A`` is a 0-curve and ``B`` a -1 curve through the
    cusp.
    """
    config.check()

    if config.kind(ROLE_D) != CUSPIDAL:
        raise ConfigurationError("D is not cuspidal", name=ROLE_D)

    cusp = config.cusp_point()
    expected = {
        SHAPE_DIHEDRAL: [ROLE_A],
        SHAPE_TYPE32: [],
        SHAPE_TYPE31: [ROLE_A, ROLE_B],
    }[shape]
    for x in expected:
        if x not in cusp.multiplicities:
            raise ConfigurationError("does not pass through the cusp", name=x)
        if cusp.local_intersection(x, ROLE_D) != 2:
            raise ConfigurationError("meets D at the cusp with the wrong order", name=x)
    if ROLE_A in expected and config.weight(ROLE_A) != 0:
        raise ConfigurationError("A is not a 0-curve", name=ROLE_A)
    if ROLE_B in expected and config.weight(ROLE_B) != -1:
        raise ConfigurationError("B is not a -1 curve", name=ROLE_B)

    bound = 8 if ROLE_A in expected else 9
    if config.weight(ROLE_D) > bound:
        raise ConfigurationError("D.D exceeds {}".format(bound), name=ROLE_D)

    string = config.names_with_role(ROLE_STRING)
    for x in string:
        if config.weight(x) > -1:
            raise ConfigurationError("string curve of weight {}".format(config.weight(x)), name=x)
    if chain_order(config, ROLE_D, string) != ["C{}".format(i + 1) for i in range(len(string))]:
        raise ConfigurationError("the string is not a chain from D")
    return True


class CuspTarget(object):
    """
    The data the enumerator has to realize for a singularity.

    Attributes
    ----------
    singularity: SingularityId
    shape: str
        ``"cyclic"``, ``"dihedral"``, ``"type32"`` or ``"type31"``
    dd: int
        ``D.D`` of the cusp configuration, ``L.L = 1`` for cyclic ones
    string: tuple of int
        The weights ``-c1, ..., -ck``
    configuration: Configuration
        The cusp configuration, or the compactifying chain for cyclic ones
    """

    def __init__(self, singularity, shape, dd, string, configuration):
        self.singularity = singularity
        self.shape = shape
        self.dd = dd
        self.string = tuple(string)
        self.configuration = configuration

    @property
    def k(self):
        return len(self.string)

    def __repr__(self):
        return "CuspTarget({}, {}, dd={}, string={})".format(
            self.singularity, self.shape, self.dd, list(self.string)
        )


def transform_target(s):
    """
    The target configuration of a singularity.

    Parameters
    ----------
    s: SingularityId or str

    Returns
    -------
    CuspTarget
    """
    s = parse_singularity(s)
    shape = shape_of(s)

    if shape == SHAPE_CYCLIC:
        config = Configuration.from_graph(compactifying_divisor(s))
        string = [config.weight(x) for x in config.names_with_role(ROLE_STRING)]
        return CuspTarget(s, shape, config.weight(ROLE_L), string, config)

    config = cusp_transform(s)
    string = [config.weight("C{}".format(i + 1)) for i in range(len(config.names_with_role(ROLE_STRING)))]
    return CuspTarget(s, shape, config.weight(ROLE_D), string, config)
