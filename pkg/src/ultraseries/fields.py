"""Coefficient fields with exact arithmetic and normalized valuations.

Three coefficient structures are provided:

* :class:`PAdicRationals` -- the rationals with the p-adic valuation,
  normalized so v(p) = 1.  Elements are plain ``Fraction`` objects, so all
  arithmetic is exact.
* :class:`FormalLaurent` -- formal Laurent series in one uniformizer over a
  prime field or the rationals, normalized so v(uniformizer) = 1.  Elements
  are finite expansions carrying an optional precision marker; an operation
  that would need coefficients beyond the known precision raises instead of
  silently truncating.
* :class:`PolyradiusExtension` -- finite Laurent combinations in auxiliary
  variables over one of the above, valued in the lexicographic group so the
  auxiliary radii stay multiplicatively independent of the base.  The minimal
  term of a nonzero element is always unique, which makes the valuation
  multiplicative.

Field objects are small frozen descriptors whose methods implement the
element arithmetic, in the style of a semiring/field protocol: ``add``,
``mul``, ``neg``, ``inv``, ``val``, ``coerce``, ``parse``, ``format``.
Residue structures (:class:`PrimeField`, :class:`Rationals`) use ints mod p
and Fractions respectively.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    PrecisionError,
    PthRootCoefficientError,
    RepresentationError,
    TruncationError,
    UnsupportedFieldError,
)
from .valuations import INFINITY, LexVal, TropVal, as_fraction


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


# ---------------------------------------------------------------------------
# residue structures


@dataclass(frozen=True)
class PrimeField:
    """F_p; elements are ints in [0, p)."""

    p: int

    def __post_init__(self):
        if not _is_prime(self.p):
            raise RepresentationError(f"{self.p} is not prime")

    @property
    def characteristic(self) -> int:
        return self.p

    def zero(self):
        return 0

    def one(self):
        return 1

    def coerce(self, x):
        if isinstance(x, bool):
            raise RepresentationError("booleans are not field elements")
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise RepresentationError(
                    f"denominator of {x} vanishes mod {self.p}")
            return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
        if isinstance(x, str):
            return self.coerce(Fraction(x))
        raise RepresentationError(f"cannot coerce {x!r} into F_{self.p}")

    def add(self, a, b):
        return (a + b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return pow(a, -1, self.p)

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def format(self, a) -> str:
        return str(a % self.p)

    def pth_root(self, a):
        # Frobenius x -> x^p is the identity on F_p, so a is its own root.
        return a % self.p


@dataclass(frozen=True)
class Rationals:
    """Q as a residue structure; elements are Fractions."""

    @property
    def characteristic(self) -> int:
        return 0

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def coerce(self, x):
        return as_fraction(x)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return 1 / Fraction(a)

    def is_zero(self, a) -> bool:
        return a == 0

    def format(self, a) -> str:
        return str(a)


# ---------------------------------------------------------------------------
# literal parsing shared by all monomial-sum element grammars


def parse_monomial_sum(text: str, symbols: tuple[str, ...]):
    """Parse ``"3*s^-2 + 1 - 1/5*y1*y2^3"`` into [(Fraction, {sym: exp})].

    The grammar is deliberately small: sums of terms, each term a ``*``-joined
    product of one optional rational literal and symbol powers ``sym^int``.
    No parentheses.  Unknown symbols and malformed rationals raise
    RepresentationError with the character offset.
    """
    terms = []
    i, n = 0, len(text)

    def skip_ws(i):
        while i < n and text[i].isspace():
            i += 1
        return i

    def fail(i, msg):
        raise RepresentationError(f"column {i + 1}: {msg}")

    i = skip_ws(i)
    if i == n:
        fail(i, "empty element literal")
    first = True
    while i < n:
        sign = 1
        i = skip_ws(i)
        if text[i] in "+-":
            sign = -1 if text[i] == "-" else 1
            i = skip_ws(i + 1)
        elif not first:
            fail(i, f"expected '+' or '-', found {text[i]!r}")
        first = False
        coef = Fraction(sign)
        powers: dict[str, int] = {}
        factor_seen = False
        while True:
            i = skip_ws(i)
            if i < n and (text[i].isdigit() or
                          (text[i] == "-" and not factor_seen)):
                j = i
                if text[j] == "-":
                    j += 1
                while j < n and text[j].isdigit():
                    j += 1
                if j < n and text[j] == "/":
                    j += 1
                    if j >= n or not text[j].isdigit():
                        fail(j, "missing denominator")
                    while j < n and text[j].isdigit():
                        j += 1
                try:
                    coef *= Fraction(text[i:j])
                except ZeroDivisionError:
                    fail(i, f"zero denominator in {text[i:j]!r}")
                i = j
            elif i < n and text[i].isalpha():
                j = i
                while j < n and (text[j].isalnum() or text[j] == "_"):
                    j += 1
                sym = text[i:j]
                if sym not in symbols:
                    fail(i, f"unknown symbol {sym!r} (expected one of {symbols})")
                i = j
                exp = 1
                if i < n and text[i] == "^":
                    i += 1
                    j = i
                    if j < n and text[j] == "-":
                        j += 1
                    if j >= n or not text[j].isdigit():
                        fail(i, "missing exponent")
                    while j < n and text[j].isdigit():
                        j += 1
                    exp = int(text[i:j])
                    i = j
                powers[sym] = powers.get(sym, 0) + exp
            else:
                fail(i, "expected a rational literal or a symbol")
            factor_seen = True
            i = skip_ws(i)
            if i < n and text[i] == "*":
                i += 1
                continue
            break
        terms.append((coef, powers))
        i = skip_ws(i)
    return terms


def _format_signed_terms(parts: list[tuple[bool, str]]) -> str:
    """Join (is_negative, body) pairs as ``a - b + c``."""
    out = []
    for k, (negative, body) in enumerate(parts):
        if k == 0:
            out.append(("-" if negative else "") + body)
        else:
            out.append(("- " if negative else "+ ") + body)
    return " ".join(out)


# ---------------------------------------------------------------------------
# p-adic rationals


@dataclass(frozen=True)
class PAdicRationals:
    """Q with the p-adic valuation, v(p) = 1.  Elements are Fractions."""

    p: int

    def __post_init__(self):
        if not _is_prime(self.p):
            raise RepresentationError(f"{self.p} is not prime")

    @property
    def characteristic(self) -> int:
        return 0

    @property
    def residue_characteristic(self) -> int:
        return self.p

    @property
    def residue_field(self) -> PrimeField:
        return PrimeField(self.p)

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def uniformizer(self):
        return Fraction(self.p)

    def coerce(self, x):
        try:
            return as_fraction(x)
        except (ValueError, ZeroDivisionError, TypeError) as exc:
            raise RepresentationError(f"bad rational literal {x!r}") from exc

    parse = coerce

    def val(self, x) -> TropVal:
        x = self.coerce(x)
        if x == 0:
            return INFINITY
        num, den, p = x.numerator, x.denominator, self.p
        v = 0
        while num % p == 0:
            num //= p
            v += 1
        while den % p == 0:
            den //= p
            v -= 1
        return TropVal(v)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("division by zero")
        return 1 / Fraction(a)

    def is_zero(self, a) -> bool:
        return a == 0

    def eq(self, a, b) -> bool:
        return a == b

    def format(self, a) -> str:
        return str(a)

    def normalize_unit(self, a):
        """Divide by p^v(a), leaving an element of valuation 0."""
        v = self.val(a)
        if v.is_infinite:
            raise ZeroDivisionError("zero element has no unit part")
        return a / Fraction(self.p) ** int(v.q)

    def residue(self, a):
        """Image in F_p; requires v(a) >= 0 (reduces units faithfully)."""
        a = self.coerce(a)
        if a.denominator % self.p == 0:
            raise RepresentationError(
                f"{a} has negative valuation; no residue image")
        return (a.numerator * pow(a.denominator, -1, self.p)) % self.p


# ---------------------------------------------------------------------------
# formal Laurent series fields


@dataclass(frozen=True)
class FLElement:
    """One element of a FormalLaurent field.

    ``coeffs`` maps uniformizer exponents to nonzero residue coefficients,
    stored as a sorted tuple of pairs.  ``prec`` is the first unknown
    exponent (the element is its stored expansion plus O(s^prec)); ``None``
    means the expansion is exact, i.e. a Laurent polynomial in s.
    """

    coeffs: tuple[tuple[int, object], ...]
    prec: int | None = None

    def as_dict(self) -> dict[int, object]:
        return dict(self.coeffs)

    @property
    def is_exact(self) -> bool:
        return self.prec is None


@dataclass(frozen=True)
class FormalLaurent:
    """k((s)) for k = F_p or Q, with v(s) = 1.

    ``truncation_order`` fixes the working precision of inversion: for a
    nonzero x, ``inv(x)`` returns r with ``x*r = 1 + O(s^(truncation_order+1))``
    and r marked with the corresponding precision.  Any operation whose
    result would need coefficients beyond what its inputs determine raises
    TruncationError rather than guessing.
    """

    residue: PrimeField | Rationals
    uniformizer: str = "s"
    truncation_order: int = 8

    def __post_init__(self):
        if self.truncation_order < 0:
            raise RepresentationError("truncation order must be >= 0")
        if not self.uniformizer.isidentifier():
            raise RepresentationError(
                f"bad uniformizer symbol {self.uniformizer!r}")

    @property
    def characteristic(self) -> int:
        return self.residue.characteristic

    @property
    def residue_characteristic(self) -> int:
        return self.residue.characteristic

    @property
    def residue_field(self):
        return self.residue

    def element(self, coeffs: dict[int, object], prec: int | None = None) -> FLElement:
        clean = {}
        for e, c in coeffs.items():
            if not isinstance(e, int):
                raise RepresentationError(f"exponent {e!r} is not an integer")
            c = self.residue.coerce(c)
            if not self.residue.is_zero(c):
                if prec is not None and e >= prec:
                    raise RepresentationError(
                        f"stored exponent {e} not below precision O(s^{prec})")
                clean[e] = c
        return FLElement(tuple(sorted(clean.items())), prec)

    def zero(self) -> FLElement:
        return FLElement((), None)

    def one(self) -> FLElement:
        return self.element({0: self.residue.one()})

    def uniformizer_element(self) -> FLElement:
        return self.element({1: self.residue.one()})

    def coerce(self, x) -> FLElement:
        if isinstance(x, FLElement):
            return x
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, (int, Fraction)):
            return self.element({0: x})
        raise RepresentationError(f"cannot coerce {x!r} into {self}")

    def parse(self, text: str) -> FLElement:
        coeffs: dict[int, object] = {}
        for q, powers in parse_monomial_sum(text, (self.uniformizer,)):
            e = powers.get(self.uniformizer, 0)
            c = self.residue.coerce(q)
            prev = coeffs.get(e, self.residue.zero())
            coeffs[e] = self.residue.add(prev, c)
        return self.element(coeffs)

    def format(self, x: FLElement) -> str:
        if not x.coeffs and x.prec is None:
            return "0"
        parts = []
        for e, c in x.coeffs:
            body = self.residue.format(c)
            negative = body.startswith("-")
            if negative:
                body = body[1:]
            if e != 0:
                if body == "1":
                    body = self.uniformizer
                else:
                    body = f"{body}*{self.uniformizer}"
                if e != 1:
                    body = f"{body}^{e}"
            parts.append((negative, body))
        out = _format_signed_terms(parts) if parts else "0"
        if x.prec is not None:
            out += f" + O({self.uniformizer}^{x.prec})"
        return out

    def val(self, x: FLElement) -> TropVal:
        if x.coeffs:
            return TropVal(x.coeffs[0][0])
        if x.prec is None:
            return INFINITY
        raise PrecisionError(
            f"element is O({self.uniformizer}^{x.prec}) with no known term; "
            "valuation undetermined")

    def is_zero(self, x: FLElement) -> bool:
        if x.coeffs:
            return False
        if x.prec is None:
            return True
        raise PrecisionError(
            f"O({self.uniformizer}^{x.prec}) cannot be decided zero or not")

    def eq(self, a: FLElement, b: FLElement) -> bool:
        return a == b

    def _trim(self, coeffs: dict[int, object], prec: int | None) -> FLElement:
        clean = {e: c for e, c in coeffs.items()
                 if not self.residue.is_zero(c)
                 and (prec is None or e < prec)}
        return FLElement(tuple(sorted(clean.items())), prec)

    @staticmethod
    def _min_prec(a: int | None, b: int | None) -> int | None:
        if a is None:
            return b
        if b is None:
            return a
        return min(a, b)

    def add(self, a: FLElement, b: FLElement) -> FLElement:
        coeffs = dict(a.coeffs)
        for e, c in b.coeffs:
            coeffs[e] = self.residue.add(coeffs.get(e, self.residue.zero()), c)
        return self._trim(coeffs, self._min_prec(a.prec, b.prec))

    def neg(self, a: FLElement) -> FLElement:
        return FLElement(tuple((e, self.residue.neg(c)) for e, c in a.coeffs),
                         a.prec)

    def sub(self, a: FLElement, b: FLElement) -> FLElement:
        return self.add(a, self.neg(b))

    def mul(self, a: FLElement, b: FLElement) -> FLElement:
        coeffs: dict[int, object] = {}
        for e1, c1 in a.coeffs:
            for e2, c2 in b.coeffs:
                e = e1 + e2
                c = self.residue.mul(c1, c2)
                coeffs[e] = self.residue.add(coeffs.get(e, self.residue.zero()), c)
        # error terms: a * O(s^pb) has valuation >= v(a) + pb, and so on
        prec = None
        va = a.coeffs[0][0] if a.coeffs else None
        vb = b.coeffs[0][0] if b.coeffs else None
        if b.prec is not None and va is not None:
            prec = self._min_prec(prec, va + b.prec)
        if a.prec is not None and vb is not None:
            prec = self._min_prec(prec, vb + a.prec)
        if a.prec is not None and b.prec is not None:
            prec = self._min_prec(prec, a.prec + b.prec)
        return self._trim(coeffs, prec)

    def shift(self, a: FLElement, k: int) -> FLElement:
        """Multiply by s^k (exact)."""
        return FLElement(tuple((e + k, c) for e, c in a.coeffs),
                         None if a.prec is None else a.prec + k)

    def inv(self, x: FLElement) -> FLElement:
        """Inverse modulo s^(truncation_order + 1 - v(x)) past the lead.

        For x = c*s^j*(1 + u) with v(u) = d >= 1 the result is
        c^-1 * s^-j * sum_{l<=L} (-u)^l, truncated so that
        x * inv(x) = 1 + O(s^(N+1)) with N the field truncation order.
        Monomials invert exactly.  Raises TruncationError when x itself is
        not known to enough terms to honor the contract.
        """
        if not x.coeffs:
            if x.prec is None:
                raise ZeroDivisionError("division by zero")
            raise PrecisionError(
                f"cannot invert O({self.uniformizer}^{x.prec}): no known term")
        j, lead = x.coeffs[0]
        lead_inv = self.residue.inv(lead)
        if len(x.coeffs) == 1 and x.prec is None:
            return FLElement(((-j, lead_inv),), None)
        modulus = self.truncation_order + 1
        if x.prec is not None and x.prec - j < modulus:
            raise TruncationError(
                f"inverse needs the input modulo {self.uniformizer}^"
                f"{modulus + j}, but it is only O({self.uniformizer}^{x.prec})")
        # u = x / (lead * s^j) - 1, known (at least) modulo s^modulus
        u = {e - j: self.residue.mul(c, lead_inv) for e, c in x.coeffs[1:]
             if e - j < modulus}
        if not u:
            total = self._trim({-j: lead_inv}, modulus - j)
            return total
        d = min(u)
        acc = {0: self.residue.one()}   # running sum of (-u)^l
        power = {0: self.residue.one()}  # running (-u)^l
        steps = (modulus + d - 1) // d
        for _ in range(steps):
            nxt: dict[int, object] = {}
            for e1, c1 in power.items():
                for e2, c2 in u.items():
                    e = e1 + e2
                    if e >= modulus:
                        continue
                    c = self.residue.mul(c1, self.residue.neg(c2))
                    nxt[e] = self.residue.add(nxt.get(e, self.residue.zero()), c)
            power = {e: c for e, c in nxt.items()
                     if not self.residue.is_zero(c)}
            if not power:
                break
            for e, c in power.items():
                acc[e] = self.residue.add(acc.get(e, self.residue.zero()), c)
        coeffs = {e - j: self.residue.mul(c, lead_inv) for e, c in acc.items()}
        return self._trim(coeffs, modulus - j)

    def normalize_unit(self, x: FLElement) -> FLElement:
        v = self.val(x)
        if v.is_infinite:
            raise ZeroDivisionError("zero element has no unit part")
        return self.shift(x, -int(v.q))

    def residue_image(self, x: FLElement):
        """Constant coefficient; requires v(x) >= 0."""
        if x.coeffs and x.coeffs[0][0] < 0:
            raise RepresentationError(
                "element has negative valuation; no residue image")
        for e, c in x.coeffs:
            if e == 0:
                return c
        if x.prec is not None and x.prec <= 0:
            raise PrecisionError("constant coefficient not determined")
        return self.residue.zero()

    # -- characteristic-p structure ------------------------------------

    def _require_char_p(self) -> int:
        p = self.characteristic
        if p == 0:
            raise UnsupportedFieldError(
                "operation needs positive characteristic; residue is Q")
        return p

    def frobenius(self, x: FLElement) -> FLElement:
        """x^p computed coefficientwise: (sum c_e s^e)^p = sum c_e^p s^(pe)."""
        p = self._require_char_p()
        coeffs = {p * e: pow(c, p, p) for e, c in x.coeffs}
        prec = None if x.prec is None else p * x.prec
        return FLElement(tuple(sorted(coeffs.items())), prec)

    def pth_root(self, x: FLElement) -> FLElement:
        """The unique y with y^p = x, when it exists.

        Needs every uniformizer exponent divisible by p; coefficients in F_p
        are their own p-th roots.
        """
        p = self._require_char_p()
        coeffs = {}
        for e, c in x.coeffs:
            if e % p != 0:
                raise PthRootCoefficientError(
                    f"coefficient term {self.uniformizer}^{e} has no "
                    f"{p}-th root: exponent {e} is not divisible by {p}")
            coeffs[e // p] = self.residue.pth_root(c)
        prec = None
        if x.prec is not None:
            prec = -((-x.prec) // p)  # ceil division
        return FLElement(tuple(sorted(coeffs.items())), prec)


# ---------------------------------------------------------------------------
# polyradius extensions


@dataclass(frozen=True)
class PRElement:
    """Finite Laurent combination sum a_I * A^I in the auxiliary variables.

    ``terms`` maps multi-indices I in Z^n to nonzero base-field elements,
    stored sorted for hashability and determinism.
    """

    terms: tuple[tuple[tuple[int, ...], object], ...]

    def as_dict(self):
        return dict(self.terms)


@dataclass(frozen=True)
class PolyradiusExtension:
    """Base field extended by ``aux_count`` formally independent radii.

    A term a_I * A^I is valued at LexVal((v(a_I), I_1, ..., I_n)); an
    element's valuation is its minimal term value.  Because distinct
    multi-indices give distinct lexicographic values, the minimum is always
    attained by a unique term, and v(fg) = v(f) + v(g) exactly.
    """

    base: PAdicRationals | FormalLaurent
    aux_count: int
    aux_prefix: str = "A"

    def __post_init__(self):
        if self.aux_count < 1:
            raise RepresentationError("need at least one auxiliary variable")

    @property
    def characteristic(self) -> int:
        return self.base.characteristic

    def aux_names(self) -> tuple[str, ...]:
        return tuple(f"{self.aux_prefix}{k + 1}" for k in range(self.aux_count))

    def element(self, terms: dict[tuple[int, ...], object]) -> PRElement:
        clean = {}
        for idx, c in terms.items():
            idx = tuple(int(e) for e in idx)
            if len(idx) != self.aux_count:
                raise RepresentationError(
                    f"multi-index {idx} has wrong length (need {self.aux_count})")
            c = self.base.coerce(c)
            if not self.base.is_zero(c):
                clean[idx] = c
        return PRElement(tuple(sorted(clean.items())))

    def zero(self) -> PRElement:
        return PRElement(())

    def one(self) -> PRElement:
        zero_idx = (0,) * self.aux_count
        return PRElement(((zero_idx, self.base.one()),))

    def constant(self, c) -> PRElement:
        return self.element({(0,) * self.aux_count: c})

    def coerce(self, x) -> PRElement:
        if isinstance(x, PRElement):
            return x
        if isinstance(x, str):
            return self.parse(x)
        return self.constant(x)

    def parse(self, text: str) -> PRElement:
        names = self.aux_names()
        terms: dict[tuple[int, ...], object] = {}
        for q, powers in parse_monomial_sum(text, names):
            idx = tuple(powers.get(name, 0) for name in names)
            c = self.base.coerce(q)
            prev = terms.get(idx, self.base.zero())
            terms[idx] = self.base.add(prev, c)
        return self.element(terms)

    def format(self, x: PRElement) -> str:
        if not x.terms:
            return "0"
        names = self.aux_names()
        parts = []
        for idx, c in x.terms:
            body = self.base.format(c)
            negative = body.startswith("-")
            if negative:
                body = body[1:]
            factors = [] if body == "1" and any(idx) else [body]
            for name, e in zip(names, idx):
                if e == 0:
                    continue
                factors.append(name if e == 1 else f"{name}^{e}")
            parts.append((negative, "*".join(factors) if factors else body))
        return _format_signed_terms(parts)

    def val(self, x: PRElement) -> LexVal:
        best = None
        for idx, c in x.terms:
            v = self.base.val(c)
            cand = LexVal((v.q, *idx))
            if best is None or cand < best:
                best = cand
        return LexVal.infinity() if best is None else best

    def is_zero(self, x: PRElement) -> bool:
        return not x.terms

    def eq(self, a: PRElement, b: PRElement) -> bool:
        return a == b

    def add(self, a: PRElement, b: PRElement) -> PRElement:
        terms = dict(a.terms)
        for idx, c in b.terms:
            terms[idx] = self.base.add(terms.get(idx, self.base.zero()), c)
        return self.element(terms)

    def neg(self, a: PRElement) -> PRElement:
        return PRElement(tuple((idx, self.base.neg(c)) for idx, c in a.terms))

    def sub(self, a: PRElement, b: PRElement) -> PRElement:
        return self.add(a, self.neg(b))

    def mul(self, a: PRElement, b: PRElement) -> PRElement:
        terms: dict[tuple[int, ...], object] = {}
        for i1, c1 in a.terms:
            for i2, c2 in b.terms:
                idx = tuple(e1 + e2 for e1, e2 in zip(i1, i2))
                c = self.base.mul(c1, c2)
                terms[idx] = self.base.add(terms.get(idx, self.base.zero()), c)
        return self.element(terms)

    def inv(self, x: PRElement) -> PRElement:
        if not x.terms:
            raise ZeroDivisionError("division by zero")
        if len(x.terms) > 1:
            raise UnsupportedFieldError(
                "only auxiliary monomials are invertible exactly in a "
                "polyradius extension")
        idx, c = x.terms[0]
        return PRElement(((tuple(-e for e in idx), self.base.inv(c)),))

    def is_aux_constant(self, x: PRElement) -> bool:
        zero_idx = (0,) * self.aux_count
        return all(idx == zero_idx for idx, _ in x.terms)

    def base_part(self, x: PRElement):
        """The base-field element, for aux-constant x; raises otherwise."""
        zero_idx = (0,) * self.aux_count
        if not x.terms:
            return self.base.zero()
        for idx, c in x.terms:
            if idx != zero_idx:
                raise RepresentationError(
                    f"element has auxiliary support {idx}; not a base element")
        return x.terms[0][1]
