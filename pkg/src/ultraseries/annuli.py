"""Annulus domains: membership, units, and certified inversion.

An annulus is described by its log-radius window (see the orientation table
in :mod:`ultraseries.newton`).  A series with a dominant monomial
``a_j T^j`` on the window factors as ``a_j T^j (1 + u)`` with ``u`` uniformly
topologically nilpotent there, so its inverse is the geometric series
``a_j^-1 T^-j sum_l (-u)^l``.  Inversion truncates that sum after
``L = ceil(prec / gap)`` steps, which is sound because every term of ``u^l``
has tropical value at least ``l * gap`` everywhere on the window.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DomainError,
    FieldMismatchError,
    GapVanishesError,
    NonUnitError,
    PrecisionError,
    UnsupportedFieldError,
)
from .newton import (
    DominanceCertificate,
    closure_gap_infimum,
    dominant_monomial,
)
from .series import (
    FiniteBelow,
    LaurentSeries,
    StreamSeries,
    TailCertificate,
    ser_add,
    ser_mul,
    ser_neg,
)
from .valuations import INFINITY, TropVal, as_fraction
from .windows import LogRadiusWindow


@dataclass(frozen=True)
class AnnulusDomain:
    """A window of log-radii together with the coefficient field."""

    window: LogRadiusWindow
    field: object


@dataclass(frozen=True)
class UnitDecomposition:
    """f = lead * T^index * (1 + u) with trop(u, w) >= gap > 0 on the window."""

    index: int
    lead: object
    u: LaurentSeries
    gap: TropVal


def converges_on(f, annulus: AnnulusDomain) -> bool:
    """Whether the series (or stream) is defined on the whole annulus.

    Finite supports converge everywhere; certified series and streams
    converge exactly where their certificate domain covers the window.
    Never raises for domain reasons: a missing guarantee is just ``False``.
    """
    if isinstance(f, StreamSeries):
        if f.ring != annulus.field:
            raise FieldMismatchError("stream and annulus fields differ")
        return f.domain.contains_window(annulus.window)
    if f.ring != annulus.field:
        raise FieldMismatchError("series and annulus fields differ")
    if f.tail is None:
        return True
    return f.tail.domain.contains_window(annulus.window)


def is_unit(f: LaurentSeries, annulus: AnnulusDomain):
    """(invertible?, witness): certificate on success, tie or split witness
    on failure."""
    if not converges_on(f, annulus):
        raise DomainError("series does not converge on the annulus")
    witness = dominant_monomial(f, annulus.window)
    return isinstance(witness, DominanceCertificate), witness


def _suggest_compact_subwindow(window: LogRadiusWindow) -> LogRadiusWindow:
    """A compact subwindow pulled off the open ends, for error reporting."""
    lo, hi = window.lo, window.hi
    if lo is None:
        lo = (hi if hi is not None else Fraction(0)) - 2
    if hi is None:
        hi = lo + 2
    if lo == hi:
        return LogRadiusWindow.point(lo)
    quarter = (hi - lo) / 4
    new_lo = lo + quarter if window.lo_open or window.lo is None else lo
    new_hi = hi - quarter if window.hi_open or window.hi is None else hi
    if new_lo > new_hi:
        new_lo = new_hi = (lo + hi) / 2
    return LogRadiusWindow.closed(new_lo, new_hi)


def unit_decomposition(f: LaurentSeries, annulus: AnnulusDomain) -> UnitDecomposition:
    """Extract the dominant monomial and the nilpotent remainder.

    The gap is the infimum of trop(u, .) over the window closure; when it
    degenerates to 0 at an open endpoint no uniform decomposition exists and
    the error suggests a compact subwindow to retry on.
    """
    if f.tail is not None:
        raise PrecisionError(
            "unit decomposition needs finite support; invert the stored part "
            "or re-derive the certificate afterwards")
    ok, witness = is_unit(f, annulus)
    if not ok:
        raise NonUnitError(f"no dominant monomial on {annulus.window}: {witness}")
    j = witness.index
    ring = f.ring
    lead = f.support[j]
    lead_inv = ring.inv(lead)
    u = LaurentSeries(ring, {e - j: ring.mul(c, lead_inv)
                             for e, c in f.support.items() if e != j})
    gap = closure_gap_infimum(f, j, annulus.window)
    if not gap > TropVal(0):
        raise GapVanishesError(
            f"dominance margin vanishes on the closure of {annulus.window}; "
            "no uniform decomposition exists on the open window",
            subwindow=_suggest_compact_subwindow(annulus.window))
    return UnitDecomposition(j, lead, u, gap)


def _term_uniform_min(e: int, v: TropVal, window: LogRadiusWindow):
    """min over the window closure of v + e*w; None encodes -infinity."""
    if (window.lo is None and e > 0) or (window.hi is None and e < 0):
        return None
    best = None
    if e == 0:
        return v
    if window.lo is not None:
        best = v + TropVal(e * window.lo)
    if window.hi is not None:
        cand = v + TropVal(e * window.hi)
        if best is None or cand < best:
            best = cand
    return best


def _drop_deep_terms(f: LaurentSeries, window: LogRadiusWindow, floor: TropVal):
    """Split off terms whose value stays >= floor everywhere on the window."""
    ring = f.ring
    kept = {}
    for e, c in f.support.items():
        bound = _term_uniform_min(e, ring.val(c), window)
        if bound is not None and bound >= floor:
            continue
        kept[e] = c
    return LaurentSeries(ring, kept)


def invert(f: LaurentSeries, annulus: AnnulusDomain, prec) -> LaurentSeries:
    """Inverse of a certified unit, correct below tropical value ``prec``.

    Returns g with finite support and a tail certificate at floor ``prec``
    on the window, such that trop(f*g - 1, w) >= prec for every w there.
    Terms of the geometric series that stay above the floor everywhere are
    dropped eagerly, which keeps supports small without weakening the bound.
    """
    prec = as_fraction(prec)
    dec = unit_decomposition(f, annulus)
    ring = f.ring
    lead_inv = ring.inv(dec.lead)
    if dec.u.is_zero:
        return LaurentSeries(ring, {-dec.index: lead_inv})
    floor = TropVal(prec)
    L = max(0, math.ceil(prec / dec.gap.q))
    neg_u = ser_neg(dec.u)
    acc = LaurentSeries(ring, {0: ring.one()})
    power = acc
    for _ in range(L):
        power = _drop_deep_terms(ser_mul(power, neg_u), annulus.window, floor)
        if power.is_zero:
            break
        acc = ser_add(acc, power)
    support = {e - dec.index: ring.mul(c, lead_inv)
               for e, c in acc.support.items()}
    series = LaurentSeries(ring, support)
    window = (series.min_exponent(), series.max_exponent())
    return LaurentSeries(ring, support,
                         TailCertificate(window, annulus.window, floor))


def inverse_stream(f: LaurentSeries, annulus: AnnulusDomain) -> StreamSeries:
    """The inverse of a certified unit as an exact coefficient stream.

    Requires the dominant index to sit at the least exponent (the
    punctured-disc orientation), so that u has only positive exponents and
    each inverse coefficient is a finite sum.  Deepening to depth L
    finalizes exponents up to L*min_exp(u) and certifies the rest at a floor
    that grows linearly with L.
    """
    dec = unit_decomposition(f, annulus)
    ring = f.ring
    if dec.u.is_zero:
        inv_mono = LaurentSeries(ring, {-dec.index: ring.inv(dec.lead)})
        return StreamSeries.from_series(inv_mono)
    if dec.index != f.min_exponent():
        raise UnsupportedFieldError(
            "inverse stream needs the dominant index at the least exponent; "
            "on this window the inverse has unbounded support below")
    j = dec.index
    u_min, u_max = dec.u.min_exponent(), dec.u.max_exponent()
    lead_inv = ring.inv(dec.lead)
    neg_u = ser_neg(dec.u)
    partials = {0: LaurentSeries(ring, {0: ring.one()})}
    powers = {0: LaurentSeries(ring, {0: ring.one()})}

    def partial(level: int) -> LaurentSeries:
        top = max(partials)
        while top < level:
            powers[top + 1] = ser_mul(powers[top], neg_u)
            partials[top + 1] = ser_add(partials[top], powers[top + 1])
            top += 1
        return partials[level]

    def coefficient(k: int):
        level = k + j
        if level < 0:
            return ring.zero()
        coef = partial(level).coefficient(k + j)
        return ring.mul(coef, lead_inv)

    lead_inv_val = TropVal(-ring.val(dec.lead).q)
    shift_bound = _term_uniform_min(-j, lead_inv_val, annulus.window)

    def floor_fn(depth: int):
        if shift_bound is None:
            return None
        return shift_bound + dec.gap.scale(Fraction(depth * u_min, u_max))

    return StreamSeries(
        ring, coefficient, shape=FiniteBelow(-j), domain=annulus.window,
        window_fn=lambda d: (-j, max(-j, d * u_min - j)),
        floor_fn=floor_fn)
