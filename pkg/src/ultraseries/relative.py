"""Polynomial coefficient rings with Gauss valuations.

Relative series over a product of a punctured disc with a polydisc have
coefficients that are polynomials in the polydisc variables.  We value such
a polynomial by its Gauss valuation at a declared log-polyradius ``u``:

    gval(sum c_a * y^a) = min over monomials of (v(c_a) + a . u)

Over a field this is multiplicative (the leading form of a product is the
product of leading forms, and polynomials over the residue field have no
zero divisors), so a :class:`RelativePolynomialRing` plugs into the same
series machinery as a genuine coefficient field, minus inversion.

A relative series is simply a :class:`~ultraseries.series.LaurentSeries`
whose ring is a RelativePolynomialRing; :func:`relative_series` builds one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import RepresentationError, UnsupportedFieldError
from .fields import parse_monomial_sum, _format_signed_terms
from .series import LaurentSeries
from .valuations import INFINITY, TropVal, as_fraction


@dataclass(frozen=True)
class RelativePolynomial:
    """Finite map multidegree -> nonzero base coefficient, sorted."""

    terms: tuple[tuple[tuple[int, ...], object], ...]

    def as_dict(self):
        return dict(self.terms)


@dataclass(frozen=True)
class RelativePolynomialRing:
    """k[y_1, ..., y_m] with the Gauss valuation at log-polyradius ``weights``."""

    base: object
    variable_count: int
    weights: tuple[Fraction, ...] = ()
    var_prefix: str = "y"

    def __post_init__(self):
        if self.variable_count < 1:
            raise RepresentationError("need at least one variable")
        w = self.weights or (Fraction(0),) * self.variable_count
        w = tuple(as_fraction(x) for x in w)
        if len(w) != self.variable_count:
            raise RepresentationError(
                f"{len(w)} weights for {self.variable_count} variables")
        object.__setattr__(self, "weights", w)

    @property
    def characteristic(self) -> int:
        return self.base.characteristic

    def variable_names(self) -> tuple[str, ...]:
        return tuple(f"{self.var_prefix}{k + 1}"
                     for k in range(self.variable_count))

    def element(self, terms: dict[tuple[int, ...], object]) -> RelativePolynomial:
        clean = {}
        for deg, c in terms.items():
            deg = tuple(int(d) for d in deg)
            if len(deg) != self.variable_count:
                raise RepresentationError(
                    f"multidegree {deg} has wrong length "
                    f"(need {self.variable_count})")
            if any(d < 0 for d in deg):
                raise RepresentationError(
                    f"multidegree {deg} has a negative entry")
            c = self.base.coerce(c)
            if not self.base.is_zero(c):
                clean[deg] = c
        return RelativePolynomial(tuple(sorted(clean.items())))

    def zero(self) -> RelativePolynomial:
        return RelativePolynomial(())

    def one(self) -> RelativePolynomial:
        return self.constant(self.base.one())

    def constant(self, c) -> RelativePolynomial:
        return self.element({(0,) * self.variable_count: c})

    def variable(self, k: int) -> RelativePolynomial:
        deg = tuple(1 if i == k else 0 for i in range(self.variable_count))
        return self.element({deg: self.base.one()})

    def coerce(self, x) -> RelativePolynomial:
        if isinstance(x, RelativePolynomial):
            return x
        if isinstance(x, str):
            return self.parse(x)
        return self.constant(x)

    def parse(self, text: str) -> RelativePolynomial:
        names = self.variable_names()
        terms: dict[tuple[int, ...], object] = {}
        for q, powers in parse_monomial_sum(text, names):
            deg = tuple(powers.get(name, 0) for name in names)
            c = self.base.coerce(q)
            prev = terms.get(deg, self.base.zero())
            terms[deg] = self.base.add(prev, c)
        return self.element(terms)

    def format(self, x: RelativePolynomial) -> str:
        if not x.terms:
            return "0"
        names = self.variable_names()
        parts = []
        for deg, c in x.terms:
            body = self.base.format(c)
            negative = body.startswith("-")
            if negative:
                body = body[1:]
            factors = [] if body == "1" and any(deg) else [body]
            for name, d in zip(names, deg):
                if d == 0:
                    continue
                factors.append(name if d == 1 else f"{name}^{d}")
            parts.append((negative, "*".join(factors) if factors else body))
        return _format_signed_terms(parts)

    def val(self, x: RelativePolynomial) -> TropVal:
        """Gauss valuation: min of v(coefficient) + multidegree . weights."""
        best = INFINITY
        for deg, c in x.terms:
            shift = sum((d * u for d, u in zip(deg, self.weights)),
                        start=Fraction(0))
            cand = self.base.val(c) + TropVal(shift)
            if cand < best:
                best = cand
        return best

    def is_zero(self, x: RelativePolynomial) -> bool:
        return not x.terms

    def eq(self, a, b) -> bool:
        return a == b

    def add(self, a: RelativePolynomial, b: RelativePolynomial) -> RelativePolynomial:
        terms = dict(a.terms)
        for deg, c in b.terms:
            terms[deg] = self.base.add(terms.get(deg, self.base.zero()), c)
        return self.element(terms)

    def neg(self, a: RelativePolynomial) -> RelativePolynomial:
        return RelativePolynomial(tuple((deg, self.base.neg(c))
                                        for deg, c in a.terms))

    def sub(self, a, b) -> RelativePolynomial:
        return self.add(a, self.neg(b))

    def mul(self, a: RelativePolynomial, b: RelativePolynomial) -> RelativePolynomial:
        terms: dict[tuple[int, ...], object] = {}
        for d1, c1 in a.terms:
            for d2, c2 in b.terms:
                deg = tuple(x + y for x, y in zip(d1, d2))
                c = self.base.mul(c1, c2)
                terms[deg] = self.base.add(terms.get(deg, self.base.zero()), c)
        return self.element(terms)

    def inv(self, x):
        raise UnsupportedFieldError(
            "polynomial coefficient rings are not fields; no inversion")

    def evaluate(self, x: RelativePolynomial, point: tuple):
        """Evaluate at a point with base-field coordinates (exact)."""
        if len(point) != self.variable_count:
            raise RepresentationError(
                f"point has {len(point)} coordinates, "
                f"ring has {self.variable_count} variables")
        coords = tuple(self.base.coerce(c) for c in point)
        total = self.base.zero()
        for deg, c in x.terms:
            term = c
            for d, y in zip(deg, coords):
                for _ in range(d):
                    term = self.base.mul(term, y)
            total = self.base.add(total, term)
        return total


def relative_series(ring: RelativePolynomialRing, coefficients: dict[int, object],
                    tail=None) -> LaurentSeries:
    """A Laurent series whose coefficients are relative polynomials."""
    return LaurentSeries(ring, coefficients, tail)
