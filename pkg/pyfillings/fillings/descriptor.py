"""
Filling descriptors
===================

A minimal symplectic filling is named by the data of its compactification:
the self-intersection of ``D`` (or of ``L`` for cyclic singularities), the
weights ``-c1, ..., -ck`` of the string, and the -1 curves attached to the
string. An attachment ``a x i`` means ``a`` disjoint -1 curves meeting the
``i``-th string curve once.

Type (3,1) singularities carry a case tag. In case II the descriptor also
records the positions ``i`` and ``j`` of the string curves met by the -1
curves through ``B`` and through ``D``.

The text form is ``(T:19;5,-2,-2,-4;1x1,2x3) Q`` with ``;i,j`` inserted
before the attachments in case II.
"""
from ..catalog import parse_singularity
from ..errors import DomainError

CASE_I = "I"
CASE_II = "II"

cases = [None, CASE_I, CASE_II]
bases = ["P2", "Q"]

_case_order = {None: 0, CASE_I: 1, CASE_II: 2}


class FillingDescriptor(object):
    """
    The descriptor of a minimal filling.

    Parameters
    ----------
    singularity: SingularityId or str
        The singularity
    dd: int
        Self-intersection of ``D``, or ``L.L = 1`` for cyclic singularities
    string: iterable of int
        The weights ``-c1, ..., -ck``
    attachments: iterable of (int, int), optional
        Pairs ``(a, i)``: ``a`` -1 curves on the ``i``-th string curve
        (1-based). Pairs with the same index are merged.
    case: str, optional
        None, ``"I"`` or ``"II"``
    ij: (int, int), optional
        The positions ``i`` and ``j`` of a case II descriptor
    base: str, optional
        ``"P2"`` or ``"Q"``
    """

    def __init__(self, singularity, dd, string, attachments=(), case=None, ij=None, base="P2"):

        self.singularity = parse_singularity(singularity)
        self.dd = int(dd)
        self.string = tuple(int(w) for w in string)

        merged = {}
        for a, i in attachments:
            a, i = int(a), int(i)
            if a < 1:
                raise DomainError("Attachment counts are positive, got {}".format(a))
            if not 1 <= i <= len(self.string):
                raise DomainError(
                    "Attachment index {} outside the string of length {}".format(i, len(self.string))
                )
            merged[i] = merged.get(i, 0) + a
        self.attachments = tuple((merged[i], i) for i in sorted(merged))

        if case not in cases:
            raise DomainError("Unknown case {!r}".format(case))
        self.case = case

        if case == CASE_II:
            if ij is None:
                raise DomainError("A case II descriptor needs the positions i, j")
            ij = (int(ij[0]), int(ij[1]))
            if not (1 <= ij[0] <= len(self.string) and 1 <= ij[1] <= len(self.string)):
                raise DomainError("Positions {} outside the string".format(ij))
        elif ij is not None:
            raise DomainError("Only case II descriptors carry positions i, j")
        self.ij = ij

        if base not in bases:
            raise DomainError("Unknown base {!r}".format(base))
        self.base = base

    @property
    def k(self):
        return len(self.string)

    @property
    def c(self):
        """The magnitudes ``c1, ..., ck``"""
        return tuple(-w for w in self.string)

    def attachment_counts(self):
        """Number of -1 curves on each string curve"""
        counts = [0] * self.k
        for a, i in self.attachments:
            counts[i - 1] = a
        return counts

    def key(self):
        """Sort key, also used for equality"""
        return (
            str(self.singularity),
            _case_order[self.case],
            self.base,
            self.dd,
            self.string,
            self.ij or (),
            self.attachments,
        )

    def __eq__(self, other):
        if not isinstance(other, FillingDescriptor):
            return NotImplemented
        return self.key() == other.key()

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __lt__(self, other):
        return self.key() < other.key()

    def __hash__(self):
        return hash(self.key())

    def to_json(self):
        d = {
            "singularity": str(self.singularity),
            "dd": self.dd,
            "string": list(self.string),
            "attachments": [[a, i] for a, i in self.attachments],
            "case": self.case,
            "base": self.base,
        }
        if self.case == CASE_II:
            d["ij"] = list(self.ij)
        return d

    @classmethod
    def from_json(cls, d, singularity=None):
        """
        Build a descriptor from its JSON object.

        ``singularity`` is used when the object has no ``"singularity"`` key,
        as in the rows of the golden file.
        """
        if singularity is None:
            singularity = d["singularity"]
        return cls(
            singularity,
            d["dd"],
            d["string"],
            attachments=d.get("attachments", []),
            case=d.get("case"),
            ij=d.get("ij"),
            base=d.get("base", "P2"),
        )

    def __str__(self):
        parts = [str(self.dd)] + [str(w) for w in self.string]
        body = "{};{}".format(self.singularity, ",".join(parts))
        if self.case == CASE_II:
            body += ";{},{}".format(*self.ij)
        body += ";" + ",".join("{}x{}".format(a, i) for a, i in self.attachments)
        text = "({}) {}".format(body, self.base)
        if self.case is not None:
            text += " case {}".format(self.case)
        return text

    def __repr__(self):
        return "FillingDescriptor({!r})".format(str(self))


def case2_violation(d):
    """
    The first constraint a case II descriptor violates, or None.

    The constraints are

    * ``a``: if ``i > 1`` then ``c_i != 2``
    * ``b``: if ``j < k`` then ``c_j != 2``
    * ``i<=j``: the -1 curve through ``B`` comes first
    * ``c``: ``b <= max(5, c_{b-2})``

    Parameters
    ----------
    d: FillingDescriptor

    Returns
    -------
    str or None
    """
    if d.case != CASE_II:
        raise DomainError("Only case II descriptors have these constraints")

    i, j = d.ij
    c = d.c

    if i > 1 and c[i - 1] == 2:
        return "a"
    if j < d.k and c[j - 1] == 2:
        return "b"
    if i > j:
        return "i<=j"
    if not satisfies_bound_c(d):
        return "c"
    return None


def satisfies_bound_c(d):
    """The bound ``b <= max(5, c_{b-2})``, vacuous when ``c_{b-2}`` does not exist"""
    b = d.singularity.b
    if b - 2 < 1 or b - 2 > d.k:
        return True
    return b <= max(5, d.c[b - 3])


def constraint_check_case2(d):
    """
    Check the constraints of a case II descriptor.

    Returns
    -------
    bool
        True if the constraints ``a``, ``b`` and ``c`` hold, together with
        ``i <= j``
    """
    return case2_violation(d) is None
