"""
Homology lattices
=================

Second homology of iterated blow-ups of the projective plane and of the
quadric :math:`\\mathbb{CP}^1 \\times \\mathbb{CP}^1`, with the intersection form
and the pairing with the first Chern class :math:`c_1`.

A lattice is described by an integer Gram matrix and by the covector
:math:`\\kappa_i = c_1 \\cdot b_i` of the first Chern class on the basis. The
standard lattices have the usual bases

* projective plane: ``h, e1, ..., eN`` with form ``diag(1, -1, ..., -1)``
* quadric: ``f1, f2, e1, ..., eN`` with ``f1.f2 = 1``, ``fi.fi = 0``

A third kind of lattice, the *plumbing* lattice, is spanned by the curves of
a weighted graph. It is used to rewrite a compactifying divisor before it is
known in which rational surface it lives.

Contracting a :math:`-1` class changes the basis so that the contracted class
becomes a basis vector, then projects on its orthogonal complement. The
result is again described by a Gram matrix and a covector, so that the same
code serves every kind of lattice.
"""
import numpy as np

from .errors import DomainError

PROJECTIVE_PLANE = "P2"
QUADRIC = "Q"
PLUMBING = "plumbing"

base_models = [PROJECTIVE_PLANE, QUADRIC, PLUMBING]

EMBEDDED = "embedded"
CUSPIDAL = "cuspidal"

curve_kinds = [EMBEDDED, CUSPIDAL]


def _standard_form(base_model, n):
    """Gram matrix, c1 covector and basis names of a standard lattice"""

    if base_model == PROJECTIVE_PLANE:
        gram = np.diag([1] + [-1] * n)
        kappa = [3] + [1] * n
        names = ["h"]
    elif base_model == QUADRIC:
        gram = np.zeros((2 + n, 2 + n), dtype=np.int64)
        gram[0, 1] = gram[1, 0] = 1
        gram[2:, 2:] = -np.eye(n, dtype=np.int64)
        kappa = [2, 2] + [1] * n
        names = ["f1", "f2"]
    else:
        raise DomainError("Unknown base model {!r}".format(base_model))

    names += ["e{}".format(i + 1) for i in range(n)]

    return np.array(gram, dtype=np.int64), np.array(kappa, dtype=np.int64), names


class AmbientLattice(object):
    """
    Homology lattice of an iterated blow-up.

    Parameters
    ----------
    base_model: str
        One of ``"P2"``, ``"Q"`` or ``"plumbing"``
    blowup_count: int, optional
        Number of blow-ups of the base, only used when ``gram`` is not given
    gram: array_like, optional
        The integer Gram matrix, for lattices obtained by contraction or for
        plumbing lattices
    kappa: array_like, optional
        The pairing of ``c1`` with the basis vectors
    names: list of str, optional
        Names of the basis vectors, only used for display

    Attributes
    ----------
    gram: numpy.ndarray
        The Gram matrix of the intersection form (read-only)
    kappa: numpy.ndarray
        The pairing of ``c1`` with the basis (read-only)
    rank: int
        The rank of the lattice
    """

    def __init__(self, base_model, blowup_count=0, gram=None, kappa=None, names=None):

        if base_model not in base_models:
            raise DomainError("Unknown base model {!r}".format(base_model))

        if gram is None:
            if blowup_count < 0:
                raise DomainError("The number of blow-ups is non-negative")
            gram, kappa, default_names = _standard_form(base_model, blowup_count)
            if names is None:
                names = default_names
        else:
            gram = np.array(gram, dtype=np.int64)
            if gram.ndim != 2 or gram.shape[0] != gram.shape[1]:
                raise DomainError("The Gram matrix should be square")
            if not np.array_equal(gram, gram.T):
                raise DomainError("The Gram matrix should be symmetric")
            if kappa is None:
                # adjunction for a basis of embedded spheres
                kappa = np.diag(gram) + 2
            kappa = np.array(kappa, dtype=np.int64)

        if kappa.shape != (gram.shape[0],):
            raise DomainError("The c1 covector does not match the Gram matrix")

        if names is None:
            names = ["v{}".format(i) for i in range(gram.shape[0])]

        self.base_model = base_model
        self.gram = gram
        self.kappa = kappa
        self.gram.setflags(write=False)
        self.kappa.setflags(write=False)
        self.names = list(names)
        self.rank = self.gram.shape[0]

        self._base_rank = {PROJECTIVE_PLANE: 1, QUADRIC: 2, PLUMBING: 0}[base_model]

    @classmethod
    def projective_plane(cls, n=0):
        """The projective plane blown up ``n`` times"""
        return cls(PROJECTIVE_PLANE, blowup_count=n)

    @classmethod
    def quadric(cls, n=0):
        """The quadric blown up ``n`` times"""
        return cls(QUADRIC, blowup_count=n)

    @classmethod
    def from_gram(cls, gram, kappa=None, names=None):
        """A plumbing lattice with the given Gram matrix"""
        return cls(PLUMBING, gram=gram, kappa=kappa, names=names)

    @property
    def blowup_count(self):
        """Number of exceptional directions on top of the base"""
        return self.rank - self._base_rank

    def pair_vectors(self, a, b):
        """Intersection number of two coefficient vectors"""
        return int(np.dot(np.asarray(a, dtype=np.int64), self.gram.dot(b)))

    def c1_vector_pairing(self, a):
        """Pairing of ``c1`` with a coefficient vector"""
        return int(np.dot(self.kappa, np.asarray(a, dtype=np.int64)))

    def signature(self):
        """
        Returns
        -------
        (int, int)
            The number of positive and of negative eigenvalues of the form
        """
        ev = np.linalg.eigvalsh(self.gram.astype(float))
        return int(np.sum(ev > 0.5)), int(np.sum(ev < -0.5))

    def c1_squared(self):
        """
        Self-intersection of ``c1``.

        Only defined for unimodular lattices, where ``c1`` is the class
        ``G^{-1} kappa``.
        """
        det = int(round(np.linalg.det(self.gram.astype(float))))
        if abs(det) != 1:
            raise DomainError("c1 is only a class of unimodular lattices")
        x = np.linalg.solve(self.gram.astype(float), self.kappa.astype(float))
        x = np.round(x).astype(np.int64)
        return int(np.dot(self.kappa, x))

    def blown_up(self):
        """
        The lattice of one more blow-up.

        Returns
        -------
        AmbientLattice
            The lattice with one more basis vector ``e`` with ``e.e = -1`` and
            ``c1.e = 1``, orthogonal to the previous basis
        """
        n = self.rank
        gram = np.zeros((n + 1, n + 1), dtype=np.int64)
        gram[:n, :n] = self.gram
        gram[n, n] = -1
        kappa = np.concatenate([self.kappa, [1]])

        used = [int(name[1:]) for name in self.names if name[:1] == "e" and name[1:].isdigit()]
        label = "e{}".format(max(used) + 1 if len(used) > 0 else 1)

        return AmbientLattice(
            self.base_model, gram=gram, kappa=kappa, names=self.names + [label]
        )._with_base_rank(self._base_rank)

    def _with_base_rank(self, base_rank):
        self._base_rank = base_rank
        return self

    def contracted(self, coefficients):
        """
        Contract a class of self-intersection ``-1``.

        Parameters
        ----------
        coefficients: array_like
            The class to contract, it should have square ``-1`` and at least
            one coefficient equal to ``+1`` or ``-1``

        Returns
        -------
        lattice: AmbientLattice
            The lattice of the orthogonal complement of the class
        transform: callable
            Maps a coefficient vector ``x`` to the coefficients of
            ``x + (x.E) E`` in the new lattice
        """
        E = np.array(coefficients, dtype=np.int64)

        if self.pair_vectors(E, E) != -1:
            raise DomainError("Only classes of square -1 can be contracted")

        pivots = np.nonzero(np.abs(E) == 1)[0]
        if len(pivots) == 0:
            raise DomainError("The class {} is not a basis vector after any unimodular change".format(E))
        j = int(pivots[-1])
        s = int(E[j])

        # new basis: b_i = e_i for i != j and b_j = E
        P = np.eye(self.rank, dtype=np.int64)
        P[:, j] = E
        G = P.T.dot(self.gram).dot(P)
        K = P.T.dot(self.kappa)

        keep = [i for i in range(self.rank) if i != j]
        col = G[keep, j]
        gram = G[np.ix_(keep, keep)] + np.outer(col, col)
        kappa = K[keep] + col * K[j]

        def transform(x):
            x = np.array(x, dtype=np.int64)
            # coordinates in the basis where E is the j-th vector
            xj = s * x[j]
            y = x - xj * E
            y[j] = xj
            return tuple(int(v) for v in y[keep])

        names = [self.names[i] for i in keep]
        lattice = AmbientLattice(self.base_model, gram=gram, kappa=kappa, names=names)
        lattice._base_rank = self._base_rank

        return lattice, transform

    def basis_vector(self, i):
        """Coefficients of the ``i``-th basis vector"""
        v = [0] * self.rank
        v[i] = 1
        return tuple(v)

    def index(self, name):
        """Position of a named basis vector"""
        try:
            return self.names.index(name)
        except ValueError:
            raise DomainError("No basis vector named {!r}".format(name))

    def element(self, kind=EMBEDDED, **coeffs):
        """
        Build a class from named coefficients.

        For example ``lattice.element(h=3, e1=-2, kind=CUSPIDAL)``.
        """
        v = [0] * self.rank
        for name, c in coeffs.items():
            v[self.index(name)] = int(c)
        return CurveClass(self, v, kind=kind)

    def __eq__(self, other):
        if not isinstance(other, AmbientLattice):
            return NotImplemented
        return (
            self.base_model == other.base_model
            and np.array_equal(self.gram, other.gram)
            and np.array_equal(self.kappa, other.kappa)
        )

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        return hash((self.base_model, self.gram.tobytes(), self.kappa.tobytes()))

    def __repr__(self):
        return "AmbientLattice({!r}, rank={})".format(self.base_model, self.rank)

    def to_dict(self):
        return {
            "base_model": self.base_model,
            "gram": self.gram.tolist(),
            "kappa": self.kappa.tolist(),
            "names": list(self.names),
            "base_rank": self._base_rank,
        }

    @classmethod
    def from_dict(cls, d):
        lattice = cls(d["base_model"], gram=d["gram"], kappa=d["kappa"], names=d["names"])
        lattice._base_rank = d.get("base_rank", lattice._base_rank)
        return lattice


class CurveClass(object):
    """
    Homology class of a rational curve.

    Parameters
    ----------
    lattice: AmbientLattice
        The lattice the class lives in
    coefficients: iterable of int
        The coefficients on the basis of the lattice
    kind: str, optional
        ``"embedded"`` for an embedded sphere (default), ``"cuspidal"`` for a
        rational curve with a single (2,3)-cusp
    """

    def __init__(self, lattice, coefficients, kind=EMBEDDED):

        if kind not in curve_kinds:
            raise DomainError("Unknown curve kind {!r}".format(kind))

        coefficients = tuple(int(c) for c in coefficients)
        if len(coefficients) != lattice.rank:
            raise DomainError(
                "Expected {} coefficients, got {}".format(lattice.rank, len(coefficients))
            )

        self.lattice = lattice
        self.coefficients = coefficients
        self.kind = kind

    def self_intersection(self):
        return self.lattice.pair_vectors(self.coefficients, self.coefficients)

    def with_kind(self, kind):
        return CurveClass(self.lattice, self.coefficients, kind=kind)

    def _check_other(self, other):
        if not isinstance(other, CurveClass):
            raise TypeError("Expected a CurveClass")
        if other.lattice != self.lattice:
            raise DomainError("The classes live in different lattices")

    def __add__(self, other):
        self._check_other(other)
        return CurveClass(
            self.lattice,
            [a + b for a, b in zip(self.coefficients, other.coefficients)],
            kind=self.kind,
        )

    def __sub__(self, other):
        self._check_other(other)
        return CurveClass(
            self.lattice,
            [a - b for a, b in zip(self.coefficients, other.coefficients)],
            kind=self.kind,
        )

    def __neg__(self):
        return CurveClass(self.lattice, [-a for a in self.coefficients], kind=self.kind)

    def __rmul__(self, k):
        if int(k) != k:
            raise TypeError("Classes can only be multiplied by integers")
        return CurveClass(self.lattice, [int(k) * a for a in self.coefficients], kind=self.kind)

    def __eq__(self, other):
        if not isinstance(other, CurveClass):
            return NotImplemented
        return (
            self.coefficients == other.coefficients
            and self.kind == other.kind
            and self.lattice == other.lattice
        )

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        return hash((self.coefficients, self.kind))

    def __repr__(self):
        terms = []
        for c, name in zip(self.coefficients, self.lattice.names):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else str(abs(c))
            terms.append("{} {}{}".format(sign, mag, name))
        if len(terms) == 0:
            return "0"
        s = " ".join(terms)
        s = s[2:] if s.startswith("+ ") else "-" + s[2:]
        return s if self.kind == EMBEDDED else "{} ({})".format(s, self.kind)


def pair(a, b):
    """
    Intersection number of two classes.

    Parameters
    ----------
    a, b: CurveClass
        Two classes of the same lattice

    Returns
    -------
    int
    """
    a._check_other(b)
    return a.lattice.pair_vectors(a.coefficients, b.coefficients)


def c1_pairing(a):
    """Pairing of the first Chern class with a class"""
    return a.lattice.c1_vector_pairing(a.coefficients)


def adjunction_check(a):
    """
    Check the adjunction identity of a rational curve.

    An embedded sphere satisfies ``c1.C = C.C + 2``, a rational curve with one
    (2,3)-cusp satisfies ``c1.C = C.C``.

    Parameters
    ----------
    a: CurveClass
        The class with its kind

    Returns
    -------
    bool
    """
    offset = 2 if a.kind == EMBEDDED else 0
    return c1_pairing(a) == a.self_intersection() + offset


def line_class(lattice, degree=1, kind=EMBEDDED):
    """The class ``degree * h`` of a blown-up projective plane"""
    if lattice.base_model != PROJECTIVE_PLANE:
        raise DomainError("Lines only live in blow-ups of the projective plane")
    return lattice.element(kind=kind, h=degree)


def fibre_class(lattice, i, kind=EMBEDDED):
    """The class of a fibre ``f1`` or ``f2`` of a blown-up quadric"""
    if lattice.base_model != QUADRIC:
        raise DomainError("Fibres only live in blow-ups of the quadric")
    if i not in (1, 2):
        raise DomainError("The quadric has two rulings, got {}".format(i))
    return lattice.element(kind=kind, **{"f{}".format(i): 1})


def exceptional_class(lattice, i):
    """The class of the ``i``-th exceptional sphere ``ei``"""
    return lattice.element(**{"e{}".format(i): 1})
