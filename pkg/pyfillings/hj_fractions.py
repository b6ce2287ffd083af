r"""
Hirzebruch-Jung continued fractions
===================================

A pair of coprime integers ``0 < q < n`` has a unique expansion

.. math::

    \frac{n}{q} = b_1 - \cfrac{1}{b_2 - \cfrac{1}{\ddots - \cfrac{1}{b_r}}}

with all :math:`b_i \geq 2`. The terms are the negated self-intersections of
the chain of curves resolving the cyclic quotient singularity of type
``(n, q)``. The expansion of ``n / (n - q)`` is the *dual* expansion and
describes the chain of a compactifying divisor.

All arithmetic is exact, on Python integers and :py:class:`fractions.Fraction`.

Example
-------

.. code-block:: python

    import pyfillings as pf

    pf.hj_expand(19, 7).terms  # (3, 4, 2)
    pf.hj_eval([3, 4, 2])  # Fraction(19, 7)
    pf.hj_dual(19, 7).terms  # (2, 3, 2, 3)
"""
from fractions import Fraction
from math import gcd

from .errors import DomainError


class HJExpansion(object):
    """
    The terms of a Hirzebruch-Jung continued fraction.

    Parameters
    ----------
    terms: iterable of int
        The terms ``b_1, ..., b_r``, all of them at least 2

    Attributes
    ----------
    terms: tuple of int
        The terms of the expansion
    """

    def __init__(self, terms):
        terms = tuple(int(t) for t in terms)

        if len(terms) == 0:
            raise DomainError("A continued fraction needs at least one term")

        for t in terms:
            if t < 2:
                raise DomainError(
                    "Terms of a Hirzebruch-Jung continued fraction are at least 2, "
                    "got {}".format(list(terms))
                )

        self.terms = terms

    @property
    def value(self):
        """The exact value of the continued fraction as a Fraction"""
        return hj_eval(self)

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)

    def __getitem__(self, i):
        return self.terms[i]

    def __eq__(self, other):
        if isinstance(other, HJExpansion):
            return self.terms == other.terms
        try:
            return self.terms == tuple(other)
        except TypeError:
            return NotImplemented

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        return hash(self.terms)

    def __repr__(self):
        return "HJExpansion({})".format(list(self.terms))

    def __str__(self):
        return "[" + ", ".join(str(t) for t in self.terms) + "]"


def _check_pair(n, q):
    if int(n) != n or int(q) != q:
        raise DomainError("n and q should be integers, got ({}, {})".format(n, q))
    if not 0 < q < n:
        raise DomainError("Expected 0 < q < n, got ({}, {})".format(n, q))
    if gcd(n, q) != 1:
        raise DomainError("n and q should be coprime, got ({}, {})".format(n, q))


def hj_expand(n, q):
    """
    Hirzebruch-Jung expansion of ``n / q``.

    Parameters
    ----------
    n: int
        The numerator
    q: int
        The denominator, coprime with ``n`` and ``0 < q < n``

    Returns
    -------
    HJExpansion
        The terms ``[b_1, ..., b_r]``
    """
    n, q = int(n), int(q)
    _check_pair(n, q)

    terms = []
    while q > 0:
        # ceiling division, then recurse on (q, b * q - n)
        b = -(-n // q)
        terms.append(b)
        n, q = q, b * q - n

    return HJExpansion(terms)


def hj_eval(e):
    """
    Exact value of a Hirzebruch-Jung continued fraction.

    Parameters
    ----------
    e: HJExpansion or iterable of int
        The terms, all of them at least 2

    Returns
    -------
    fractions.Fraction
        The value ``b_1 - 1 / (b_2 - 1 / (... - 1 / b_r))``
    """
    if not isinstance(e, HJExpansion):
        e = HJExpansion(e)

    value = Fraction(e.terms[-1])
    for b in reversed(e.terms[:-1]):
        value = b - 1 / value

    return value


def hj_from_fraction(x):
    """Expansion of a rational number ``x > 1`` given as a Fraction"""
    x = Fraction(x)
    if x.denominator == 1 and x.numerator >= 2:
        return HJExpansion([x.numerator])
    return hj_expand(x.numerator, x.denominator)


def hj_dual(n, q):
    """
    The dual expansion, i.e. the expansion of ``n / (n - q)``.

    Parameters
    ----------
    n: int
        The numerator
    q: int
        The denominator, coprime with ``n`` and ``0 < q < n``

    Returns
    -------
    HJExpansion
        The terms ``[c_1, ..., c_k]``
    """
    n, q = int(n), int(q)
    _check_pair(n, q)
    return hj_expand(n, n - q)


def hj_dual_terms(terms):
    """
    Dual of an expansion given by its terms.

    If ``terms`` evaluates to ``a / b`` the result is the expansion of
    ``a / (a - b)``.

    Parameters
    ----------
    terms: iterable of int
        The terms, all of them at least 2

    Returns
    -------
    HJExpansion
    """
    value = hj_eval(terms)
    return hj_dual(value.numerator, value.denominator)
