"""
Exceptions raised by pyfillings.

Domain problems (bad identifiers, impossible rewrites, descriptors that
cannot be realized) derive from :py:class:`ValueError` so that callers that
only know about the standard exceptions still catch them. Running out of
search resources is a :py:class:`RuntimeError`.
"""


class DomainError(ValueError):
    """Invalid input to one of the catalog or arithmetic routines."""

    pass


class ConfigurationError(ValueError):
    """
    A rewrite step was rejected by the configuration engine.

    Parameters
    ----------
    message: str
        Description of the problem
    name: str, optional
        Name of the offending curve or point
    """

    def __init__(self, message, name=None):
        if name is not None:
            message = "{}: {}".format(name, message)
        ValueError.__init__(self, message)
        self.name = name


class FillingVerificationError(ValueError):
    """
    A filling descriptor could not be realized.

    Parameters
    ----------
    message: str
        Description of the problem
    constraint: str
        Short tag of the first violated constraint, e.g. ``"a"``, ``"dd-bound"``
        or ``"no-witness"``
    """

    def __init__(self, message, constraint):
        ValueError.__init__(self, "[{}] {}".format(constraint, message))
        self.constraint = constraint


class SearchCapsExhausted(RuntimeError):
    """The search could not be completed within the given caps."""

    def __init__(self, message, caps=None):
        RuntimeError.__init__(self, message)
        self.caps = caps
