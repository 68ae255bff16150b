"""Laurent series with finite support and explicit tail certificates.

A :class:`LaurentSeries` is a finite map from integer exponents to nonzero
coefficients in some coefficient ring, optionally together with a
:class:`TailCertificate` that bounds everything the finite data omits: on a
declared window of log-radii, every omitted term has tropical value
``v(a_i) + i*w >= floor``.  A series without a certificate *is* its finite
support (a Laurent polynomial); a series with one represents its true value
up to terms of value at least ``floor``.

:class:`StreamSeries` models series given by a coefficient oracle; calling
``deepen(depth)`` materializes a window of exact coefficients together with a
certificate for the rest.  The oracle is exact on whatever window ``deepen``
returns; deeper calls extend the window and never contradict earlier ones.

The characteristic-p operations at the bottom implement the p-th power map
(coefficientwise Frobenius) and its partial inverse, plus a semi-decision
procedure for identities of the form f^(p^m) * H = G.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    FieldMismatchError,
    PrecisionError,
    PthRootExponentError,
    UnsupportedFieldError,
    ZeroSeriesError,
)
from .fields import FormalLaurent, PrimeField
from .valuations import INFINITY, TropVal, as_fraction
from .windows import LogRadiusWindow


@dataclass(frozen=True)
class TailCertificate:
    """Everything outside ``window`` has tropical value >= ``floor``.

    ``window`` is an inclusive exponent range [e_min, e_max] containing all
    stored support; ``domain`` is the log-radius window on which the bound
    holds.  The floor is a single rational (or infinity, meaning there are no
    omitted terms at all).
    """

    window: tuple[int, int]
    domain: LogRadiusWindow
    floor: TropVal

    def __post_init__(self):
        e_min, e_max = self.window
        if e_min > e_max:
            raise ValueError(f"bad certificate window [{e_min}, {e_max}]")


class LaurentSeries:
    """Finite-support Laurent data over a coefficient ring."""

    __slots__ = ("ring", "support", "tail")

    def __init__(self, ring, support: dict[int, object], tail: TailCertificate | None = None):
        clean = {}
        for e, c in support.items():
            if not isinstance(e, int):
                raise ValueError(f"exponent {e!r} is not an integer")
            c = ring.coerce(c)
            if not ring.is_zero(c):
                clean[e] = c
        if tail is not None and clean:
            e_min, e_max = tail.window
            if min(clean) < e_min or max(clean) > e_max:
                raise ValueError(
                    "stored support leaks outside the certificate window")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "support", clean)
        object.__setattr__(self, "tail", tail)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentSeries is immutable")

    @property
    def is_zero(self) -> bool:
        return not self.support

    def exponents(self) -> list[int]:
        return sorted(self.support)

    def coefficient(self, e: int):
        return self.support.get(e, self.ring.zero())

    def min_exponent(self) -> int:
        if not self.support:
            raise ZeroSeriesError("zero series has no support")
        return min(self.support)

    def max_exponent(self) -> int:
        if not self.support:
            raise ZeroSeriesError("zero series has no support")
        return max(self.support)

    def restrict(self, lowest: int) -> "LaurentSeries":
        """Drop exponents below ``lowest`` (certificate, if any, is kept)."""
        kept = {e: c for e, c in self.support.items() if e >= lowest}
        return LaurentSeries(self.ring, kept, self.tail)

    def drop_tail(self) -> "LaurentSeries":
        return LaurentSeries(self.ring, dict(self.support), None)

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (self.ring == other.ring and self.support == other.support
                and self.tail == other.tail)

    def __hash__(self):
        return hash((self.ring, tuple(sorted(self.support.items(), key=lambda t: t[0])),
                     self.tail))

    def __repr__(self):
        body = ", ".join(f"{e}: {self.ring.format(c)}"
                         for e, c in sorted(self.support.items()))
        tail = "" if self.tail is None else f", tail floor {self.tail.floor}"
        return f"<LaurentSeries {{{body}}}{tail}>"


def monomial(ring, exponent: int, coefficient) -> LaurentSeries:
    return LaurentSeries(ring, {exponent: coefficient})


def laurent_from_pairs(ring, pairs) -> LaurentSeries:
    support: dict[int, object] = {}
    for e, c in pairs:
        c = ring.coerce(c)
        if e in support:
            support[e] = ring.add(support[e], c)
        else:
            support[e] = c
    return LaurentSeries(ring, support)


# ---------------------------------------------------------------------------
# windowed bounds on finite supports


def term_value(v: TropVal, exponent: int, w) -> TropVal:
    """v + exponent * w, the tropical value of one term at log-radius w."""
    return v + TropVal(as_fraction(w) * exponent)


def uniform_term_bound(ring, support: dict[int, object], domain: LogRadiusWindow):
    """min over the closure of ``domain`` of min_i (v(a_i) + i*w).

    Returns a TropVal, or None when the infimum is -infinity (which happens
    exactly when an unbounded end of the domain sees an exponent of the
    wrong sign).  Finite-support tropical values are concave piecewise-linear
    in w, so the minimum over an interval is attained at its endpoints.
    """
    if not support:
        return INFINITY
    best = INFINITY
    for e, c in support.items():
        v = ring.val(c)
        if domain.lo is None:
            if e > 0:
                return None
            if e == 0 and v < best:
                best = v
        else:
            cand = term_value(v, e, domain.lo)
            if cand < best:
                best = cand
        if domain.hi is None:
            if e < 0:
                return None
            if e == 0 and v < best:
                best = v
        else:
            cand = term_value(v, e, domain.hi)
            if cand < best:
                best = cand
    return best


# ---------------------------------------------------------------------------
# ring operations


def _check_same_ring(f: LaurentSeries, g: LaurentSeries):
    if f.ring != g.ring:
        raise FieldMismatchError(
            f"series live over different rings: {f.ring} vs {g.ring}")


def _hull(f: LaurentSeries) -> tuple[int, int] | None:
    """Exponent window an operand occupies: its certificate window, or the
    hull of its support for exact series (None for the exact zero series)."""
    if f.tail is not None:
        return f.tail.window
    if not f.support:
        return None
    return (min(f.support), max(f.support))


def ser_add(f: LaurentSeries, g: LaurentSeries) -> LaurentSeries:
    _check_same_ring(f, g)
    ring = f.ring
    support = dict(f.support)
    for e, c in g.support.items():
        support[e] = ring.add(support.get(e, ring.zero()), c)
    tail = None
    if f.tail is not None and g.tail is not None:
        domain = f.tail.domain.intersect(g.tail.domain)
        floor = min(f.tail.floor, g.tail.floor)
        hf, hg = f.tail.window, g.tail.window
        tail = TailCertificate((min(hf[0], hg[0]), max(hf[1], hg[1])), domain, floor)
    elif f.tail is not None or g.tail is not None:
        carrier, other = (f, g) if f.tail is not None else (g, f)
        ho = _hull(other)
        hc = carrier.tail.window
        window = hc if ho is None else (min(hc[0], ho[0]), max(hc[1], ho[1]))
        tail = TailCertificate(window, carrier.tail.domain, carrier.tail.floor)
    return LaurentSeries(ring, support, tail)


def ser_neg(f: LaurentSeries) -> LaurentSeries:
    ring = f.ring
    return LaurentSeries(ring, {e: ring.neg(c) for e, c in f.support.items()},
                         f.tail)


def ser_sub(f: LaurentSeries, g: LaurentSeries) -> LaurentSeries:
    return ser_add(f, ser_neg(g))


def ser_mul(f: LaurentSeries, g: LaurentSeries) -> LaurentSeries:
    _check_same_ring(f, g)
    ring = f.ring
    if (f.is_zero and f.tail is None) or (g.is_zero and g.tail is None):
        return LaurentSeries(ring, {})
    support: dict[int, object] = {}
    for e1, c1 in f.support.items():
        for e2, c2 in g.support.items():
            e = e1 + e2
            c = ring.mul(c1, c2)
            if e in support:
                support[e] = ring.add(support[e], c)
            else:
                support[e] = c
    tail = None
    if f.tail is not None or g.tail is not None:
        domain = f.tail.domain if f.tail is not None else g.tail.domain
        if f.tail is not None and g.tail is not None:
            domain = f.tail.domain.intersect(g.tail.domain)
        candidates = []
        if f.tail is not None:
            bound_g = uniform_term_bound(ring, g.support, domain)
            if bound_g is None:
                raise PrecisionError(
                    "cannot certify the product tail: the co-factor is "
                    "unbounded below on the domain")
            candidates.append(f.tail.floor + bound_g)
        if g.tail is not None:
            bound_f = uniform_term_bound(ring, f.support, domain)
            if bound_f is None:
                raise PrecisionError(
                    "cannot certify the product tail: the co-factor is "
                    "unbounded below on the domain")
            candidates.append(g.tail.floor + bound_f)
        if f.tail is not None and g.tail is not None:
            candidates.append(f.tail.floor + g.tail.floor)
        floor = min(candidates)
        hf, hg = _hull(f), _hull(g)
        if hf is None or hg is None:  # zero stored part with a tail
            window_lo = min(support) if support else 0
            window_hi = max(support) if support else 0
        else:
            window_lo, window_hi = hf[0] + hg[0], hf[1] + hg[1]
        tail = TailCertificate((window_lo, window_hi), domain, floor)
    return LaurentSeries(ring, support, tail)


def ser_scale(f: LaurentSeries, c) -> LaurentSeries:
    """Multiply by a ring constant (exact; tail floor shifts by v(c))."""
    ring = f.ring
    c = ring.coerce(c)
    if ring.is_zero(c):
        return LaurentSeries(ring, {})
    tail = f.tail
    if tail is not None:
        tail = TailCertificate(tail.window, tail.domain, tail.floor + ring.val(c))
    return LaurentSeries(ring, {e: ring.mul(a, c) for e, a in f.support.items()},
                         tail)


def ser_shift(f: LaurentSeries, k: int) -> LaurentSeries:
    """Multiply by T^k.  Requires an exact series when k != 0 (a tail floor
    would become radius-dependent)."""
    if k == 0:
        return f
    if f.tail is not None:
        raise PrecisionError("cannot shift a series that carries a tail "
                             "certificate; drop or re-derive the certificate")
    return LaurentSeries(f.ring, {e + k: c for e, c in f.support.items()})


def ser_pow(f: LaurentSeries, n: int) -> LaurentSeries:
    if n < 0:
        raise ValueError("negative powers need an inversion window")
    out = LaurentSeries(f.ring, {0: f.ring.one()})
    for _ in range(n):
        out = ser_mul(out, f)
    return out


# ---------------------------------------------------------------------------
# streams


@dataclass(frozen=True)
class FiniteBelow:
    """Support is known to vanish below ``j0``."""

    j0: int


INFINITE_BELOW = "infinite_below"
UNKNOWN = "unknown"


class StreamSeries:
    """A series given by an exact coefficient oracle.

    ``coefficient(i)`` must be total and pure: same exponent, same result.
    ``shape`` declares what is known about the support below: a
    :class:`FiniteBelow`, or the ``INFINITE_BELOW`` / ``UNKNOWN`` markers.
    An infinite-below support can never be discovered from finitely many
    coefficients, so it is declared by the constructor, never inferred.

    ``deepen(depth)`` returns the coefficients on a growing exponent window
    as a LaurentSeries; when the stream carries a certificate strategy
    (``floor_fn``), the result carries a TailCertificate for everything
    outside that window, valid on ``domain``.
    """

    __slots__ = ("ring", "coefficient", "shape", "domain", "_window_fn",
                 "_floor_fn")

    def __init__(self, ring, coefficient, shape=UNKNOWN,
                 domain: LogRadiusWindow | None = None,
                 window_fn=None, floor_fn=None):
        self.ring = ring
        self.coefficient = coefficient
        self.shape = shape
        self.domain = domain if domain is not None else LogRadiusWindow.everything()
        if window_fn is None:
            if isinstance(shape, FiniteBelow):
                window_fn = lambda d: (shape.j0, shape.j0 + d)  # noqa: E731
            else:
                window_fn = lambda d: (-d, d)  # noqa: E731
        self._window_fn = window_fn
        self._floor_fn = floor_fn

    def deepen(self, depth: int) -> LaurentSeries:
        if depth < 0:
            raise ValueError("depth must be >= 0")
        lo, hi = self._window_fn(depth)
        support = {}
        for e in range(lo, hi + 1):
            c = self.coefficient(e)
            if not self.ring.is_zero(c):
                support[e] = c
        tail = None
        if self._floor_fn is not None:
            floor = self._floor_fn(depth)
            if floor is not None:
                tail = TailCertificate((lo, hi), self.domain, floor)
        return LaurentSeries(self.ring, support, tail)

    @classmethod
    def from_series(cls, f: LaurentSeries) -> "StreamSeries":
        """View finite data as a stream.

        For exact series the certificate is vacuous (floor = infinity, any
        window); for a series with a tail the stream reproduces the stored
        data and transports the certificate unchanged.
        """
        if f.tail is None:
            j0 = min(f.support) if f.support else 0
            hull_lo = min(j0, 0)
            hull_hi = max(f.support) if f.support else 0

            def window_fn(d, lo=hull_lo, hi=hull_hi):
                return (lo - d, max(hi, lo) + d)

            return cls(f.ring, lambda e: f.coefficient(e),
                       shape=FiniteBelow(j0),
                       domain=LogRadiusWindow.everything(),
                       window_fn=window_fn,
                       floor_fn=lambda d: INFINITY)
        cert = f.tail
        shape = FiniteBelow(cert.window[0]) if cert.domain.hi is None else UNKNOWN
        return cls(f.ring, lambda e: f.coefficient(e),
                   shape=shape,
                   domain=cert.domain,
                   window_fn=lambda d: cert.window,
                   floor_fn=lambda d: cert.floor)


# ---------------------------------------------------------------------------
# characteristic-p operations


def _char_p_ring(f: LaurentSeries) -> int:
    ring = f.ring
    if not isinstance(ring, FormalLaurent) or not isinstance(ring.residue, PrimeField):
        raise UnsupportedFieldError(
            "p-th power structure needs a Laurent series field over a prime "
            "residue field")
    return ring.characteristic


def pth_power(f: LaurentSeries) -> LaurentSeries:
    """f^p via Frobenius: exponents scale by p, coefficients go to their
    p-th powers.  Exact and linear-time on the support."""
    p = _char_p_ring(f)
    if f.tail is not None:
        raise PrecisionError("p-th power needs finite support (no tail)")
    ring = f.ring
    return LaurentSeries(ring, {p * e: ring.frobenius(c)
                                for e, c in f.support.items()})


def pth_root(f: LaurentSeries) -> LaurentSeries:
    """The unique g with g^p = f, when f is a p-th power.

    Fails with a named error on the first exponent not divisible by p, or on
    the first coefficient without a p-th root in the field.
    """
    p = _char_p_ring(f)
    if f.tail is not None:
        raise PrecisionError("p-th root needs finite support (no tail)")
    ring = f.ring
    support = {}
    for e, c in sorted(f.support.items()):
        if e % p != 0:
            raise PthRootExponentError(
                f"support exponent {e} is not divisible by {p}")
        support[e // p] = ring.pth_root(c)
    return LaurentSeries(ring, support)


@dataclass(frozen=True)
class Undetermined:
    """A semi-decision gave up at this depth; distinct from False."""

    depth: int

    def __bool__(self):
        raise TypeError("Undetermined is neither true nor false; "
                        "compare explicitly or deepen the scan")


def verify_power_identity(f: StreamSeries, G: LaurentSeries, H: LaurentSeries,
                          m: int, depth: int, prec=None):
    """Semi-decide whether f^(p^m) * H = G.

    Coefficients of f are read exactly on the window reached at ``depth``;
    Frobenius makes (stored + tail)^(p^m) split, so the product is exactly
    known on a "determined" exponent range that no tail term can reach.  A
    nonzero determined coefficient of f^(p^m)*H - G refutes the identity
    (returns False).  If all determined coefficients vanish, the identity is
    confirmed (True) when the remaining terms are provably above the working
    precision ``prec`` -- always the case when the stream is exact.
    Otherwise returns :class:`Undetermined`.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    _check_same_ring(G, H)
    if G.ring != f.ring:
        raise FieldMismatchError("stream and series rings differ")
    if H.is_zero:
        raise ZeroSeriesError("H must be nonzero")
    if G.tail is not None or H.tail is not None:
        raise PrecisionError("G and H must have finite support")
    p = G.ring.characteristic
    if p == 0:
        raise UnsupportedFieldError("identity verification needs char p > 0")
    q = p ** m

    scan = f.deepen(depth)
    lo, hi = (scan.tail.window if scan.tail is not None
              else ((min(scan.support), max(scan.support)) if scan.support
                    else (0, 0)))
    stored = scan.drop_tail()
    s_q = stored
    for _ in range(m):
        s_q = pth_power(s_q)
    residual = ser_sub(ser_mul(s_q, H), G)

    floor = scan.tail.floor if scan.tail is not None else None
    if floor is not None and floor.is_infinite:
        # no omitted terms at all: the residual is the exact defect
        return residual.is_zero

    min_h, max_h = min(H.support), max(H.support)
    det_lo = q * (lo - 1) + max_h + 1
    det_hi = q * (hi + 1) + min_h - 1
    for e in residual.exponents():
        if det_lo <= e <= det_hi:
            return False

    if floor is None or prec is None:
        return Undetermined(depth)
    prec = TropVal(as_fraction(prec))
    outside = {e: c for e, c in residual.support.items()
               if not det_lo <= e <= det_hi}
    bound_out = uniform_term_bound(residual.ring, outside, f.domain)
    bound_h = uniform_term_bound(H.ring, H.support, f.domain)
    if bound_out is None or bound_h is None:
        return Undetermined(depth)
    if bound_out >= prec and floor.scale(q) + bound_h >= prec:
        return True
    return Undetermined(depth)
