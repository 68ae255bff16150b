"""Exact value groups.

Everything downstream measures size additively: a field element ``x`` has a
valuation ``v(x)`` with ``|x| = base^(-v(x))``, so small absolute value means
large valuation.  Two groups are provided:

* :class:`TropVal` -- rationals plus an absorbing infinity (the rank-1 case);
* :class:`LexVal` -- tuples of rationals ordered lexicographically, used when
  auxiliary radii must stay multiplicatively independent of the base field.

Both are immutable and hashable.  No floating point is involved anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering


def as_fraction(x) -> Fraction:
    """Coerce ints, strings like ``"7/50"``, and Fractions to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


@total_ordering
class TropVal:
    """A rational valuation value, or infinity (the valuation of 0).

    Ordered totally, with ``Finite(q1) < Finite(q2)`` iff ``q1 < q2`` and
    ``Finite(_) < Infinity``.  Addition is componentwise with infinity
    absorbing.  ``scale(n)`` multiplies a finite value by a rational
    (infinity stays infinity).
    """

    __slots__ = ("q",)

    def __init__(self, q=None):
        object.__setattr__(self, "q", None if q is None else as_fraction(q))

    def __setattr__(self, name, value):
        raise AttributeError("TropVal is immutable")

    @classmethod
    def infinity(cls) -> "TropVal":
        return _TROP_INF

    @property
    def is_infinite(self) -> bool:
        return self.q is None

    def __add__(self, other) -> "TropVal":
        other = trop(other)
        if self.q is None or other.q is None:
            return _TROP_INF
        return TropVal(self.q + other.q)

    __radd__ = __add__

    def __sub__(self, other) -> "TropVal":
        other = trop(other)
        if other.q is None:
            raise ValueError("cannot subtract infinity")
        if self.q is None:
            return _TROP_INF
        return TropVal(self.q - other.q)

    def scale(self, n) -> "TropVal":
        if self.q is None:
            return _TROP_INF
        return TropVal(self.q * as_fraction(n))

    def __eq__(self, other):
        if not isinstance(other, TropVal):
            return NotImplemented
        return self.q == other.q

    def __lt__(self, other):
        if not isinstance(other, TropVal):
            return NotImplemented
        if self.q is None:
            return False
        if other.q is None:
            return True
        return self.q < other.q

    def __hash__(self):
        return hash(("TropVal", self.q))

    def __repr__(self):
        return "TropVal.infinity()" if self.q is None else f"TropVal({str(self.q)!r})"

    def __str__(self):
        return "inf" if self.q is None else str(self.q)


_TROP_INF = TropVal.__new__(TropVal)
object.__setattr__(_TROP_INF, "q", None)

INFINITY = _TROP_INF


def trop(x) -> TropVal:
    """Coerce a rational (or TropVal) into the rank-1 value group."""
    if isinstance(x, TropVal):
        return x
    return TropVal(as_fraction(x))


@total_ordering
class LexVal:
    """A tuple of rationals compared lexicographically, or infinity.

    This is the value group of a polyradius extension: the first coordinate
    is the base-field valuation, the remaining ones record the auxiliary
    exponents.  Addition is componentwise and requires equal lengths;
    infinity absorbs.  The order is translation-invariant.
    """

    __slots__ = ("coords",)

    def __init__(self, coords=None):
        if coords is None:
            object.__setattr__(self, "coords", None)
        else:
            object.__setattr__(
                self, "coords", tuple(as_fraction(c) for c in coords))

    def __setattr__(self, name, value):
        raise AttributeError("LexVal is immutable")

    @classmethod
    def infinity(cls) -> "LexVal":
        return _LEX_INF

    @property
    def is_infinite(self) -> bool:
        return self.coords is None

    def __add__(self, other):
        if not isinstance(other, LexVal):
            return NotImplemented
        if self.coords is None or other.coords is None:
            return _LEX_INF
        if len(self.coords) != len(other.coords):
            raise ValueError("cannot add LexVal of different lengths")
        return LexVal(a + b for a, b in zip(self.coords, other.coords))

    def __eq__(self, other):
        if not isinstance(other, LexVal):
            return NotImplemented
        return self.coords == other.coords

    def __lt__(self, other):
        if not isinstance(other, LexVal):
            return NotImplemented
        if self.coords is None:
            return False
        if other.coords is None:
            return True
        return self.coords < other.coords

    def __hash__(self):
        return hash(("LexVal", self.coords))

    def __repr__(self):
        if self.coords is None:
            return "LexVal.infinity()"
        return f"LexVal(({', '.join(str(c) for c in self.coords)}))"

    def __str__(self):
        if self.coords is None:
            return "inf"
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


_LEX_INF = LexVal.__new__(LexVal)
object.__setattr__(_LEX_INF, "coords", None)


def lex_project(x: LexVal) -> TropVal:
    """First coordinate of a lexicographic value; the rank-1 shadow."""
    if x.coords is None:
        return INFINITY
    return TropVal(x.coords[0])
