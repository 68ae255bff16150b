"""Meromorphy detection at a punctured-disc origin, and discwise descent.

The origin sits at ``w -> +infinity`` in log coordinates.  A stream that is
invertible on some punctured neighborhood of the origin has a term that
dominates all others for every large enough ``w``; letting ``w`` grow then
forces every coefficient below the dominant index to vanish, so the stream
is meromorphic with that index as its lowest exponent.  This module turns
that argument into a semi-decision over deepening scans.

For a relative series (polynomial coefficients ``b_i``), meromorphy is
detected on a single fiber: pull back at a sample point, find the pole order
there, and then check *symbolically* that every coefficient below the
detected lowest exponent is the zero polynomial.  A nonzero coefficient that
happens to vanish at the sample point is reported as a non-generic point,
never silently absorbed -- so a successful answer does not depend on the
luck of the sample.

Descent from a polyradius extension works coefficientwise: a series all of
whose coefficients are constant in the auxiliary variables *is* a series
over the base field, and any auxiliary monomial in any coefficient is a
named obstruction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    ContradictionError,
    DimensionMismatchError,
    DomainError,
    NonGenericPointError,
    NontrivialAuxSupportError,
    UnsupportedFieldError,
)
from .fields import PolyradiusExtension
from .relative import RelativePolynomialRing
from .series import (
    FiniteBelow,
    INFINITE_BELOW,
    LaurentSeries,
    StreamSeries,
    UNKNOWN,
    Undetermined,
)
from .valuations import TropVal


@dataclass(frozen=True)
class DominanceAtZero:
    """``index`` strictly minimizes the tropical value for every w >= w0.

    ``w0 = None`` means every radius of the stream's domain (monomial case).
    """

    index: int
    w0: Fraction | None


@dataclass(frozen=True)
class TieFamily:
    """Refutation witness: a persistent tie among scanned exponents.

    Kept for API completeness; distinct exponents are affine with distinct
    slopes and tie at isolated radii only, so the scan procedure below
    reports Undetermined rather than ever building one of these.
    """

    w: Fraction
    indices: tuple[int, ...]


@dataclass(frozen=True)
class Meromorphic:
    """No essential singularity; the expansion starts at ``lowest_exponent``."""

    lowest_exponent: int

    @property
    def pole_order(self) -> int:
        return max(0, -self.lowest_exponent)


@dataclass(frozen=True)
class Essential:
    """Declared infinite-below support, with scan evidence."""

    declared: bool
    scanned_negative_terms: int


@dataclass(frozen=True)
class GenericPoint:
    """An exact sample point for fiber pullback."""

    coordinates: tuple

    def __init__(self, coordinates):
        object.__setattr__(self, "coordinates", tuple(coordinates))


@dataclass(frozen=True)
class MeroExtension:
    """The relative series continues meromorphically with this pole order."""

    pole_order: int
    regular_part: LaurentSeries


def _require_punctured_disc(f: StreamSeries):
    if f.domain.hi is not None:
        raise DomainError(
            "the stream's certificate domain does not reach w -> +infinity; "
            "no punctured neighborhood of the origin is covered")


def _integer_above(x: Fraction) -> Fraction:
    """The least integer strictly greater than x, as a Fraction."""
    return Fraction(math.floor(x) + 1)


def check_invertible_near_zero(f: StreamSeries, depth: int):
    """Find an index dominating all others for every large enough w.

    Uses the scan window at ``depth``: the least nonzero scanned exponent j
    must beat every other scanned term past a computable threshold, and the
    tail certificate must pin everything unscanned strictly above the floor
    once j's own value drops below it.  Any unscanned exponent is above the
    window (below-window negative exponents are forced to vanish by a sound
    certificate on an unbounded domain), so it loses to j for w >= w0 as
    well.  Returns Undetermined when the scan cannot yet settle this.
    """
    _require_punctured_disc(f)
    if f.shape == INFINITE_BELOW:
        return Undetermined(depth)
    scan = f.deepen(depth)
    if not scan.support:
        return Undetermined(depth)
    j = min(scan.support)
    terms = [(e, f.ring.val(c).q) for e, c in sorted(scan.support.items())]
    v_j = dict(terms)[j]

    window_lo = scan.tail.window[0] if scan.tail is not None else None
    if not isinstance(f.shape, FiniteBelow):
        if scan.tail is None:
            return Undetermined(depth)
        if window_lo > min(0, j):
            return Undetermined(depth)

    # threshold against the other scanned terms: j wins once w exceeds c*
    c_star = None
    for e, v in terms:
        if e == j:
            continue
        cross = Fraction(v_j - v, e - j)
        if c_star is None or cross > c_star:
            c_star = cross

    # threshold against the certified tail (exponents above the window):
    # j beats a tail term at every w >= w0 once v_j + j*w0 < floor
    floor = scan.tail.floor if scan.tail is not None else None
    if floor is None:
        return Undetermined(depth)  # infinitely many uncontrolled terms above
    need_upper = None  # w0 must stay strictly below this when j > 0
    tail_lower = None  # w0 must stay strictly above this when j < 0
    if not floor.is_infinite:
        if j == 0:
            if not TropVal(v_j) < floor:
                return Undetermined(depth)
        elif j < 0:
            tail_lower = Fraction(floor.q - v_j, j)
        else:
            need_upper = Fraction(floor.q - v_j, j)

    # pick a rational w0 with: w0 > lower (strict), w0 >= domain start,
    # w0 < need_upper (strict); prefer the domain start, else a small integer
    strict_bounds = [b for b in (c_star, tail_lower) if b is not None]
    lower = max(strict_bounds) if strict_bounds else None
    domain_lo = f.domain.lo
    if lower is None and need_upper is None:
        return DominanceAtZero(j, domain_lo)  # None = the whole domain
    if domain_lo is not None and (lower is None or domain_lo > lower) \
            and (need_upper is None or domain_lo < need_upper):
        return DominanceAtZero(j, domain_lo)
    if lower is not None and (domain_lo is None or domain_lo <= lower):
        if need_upper is None:
            return DominanceAtZero(j, _integer_above(lower))
        if lower < need_upper:
            cand = _integer_above(lower)
            if cand >= need_upper:
                cand = (lower + need_upper) / 2
            return DominanceAtZero(j, cand)
        return Undetermined(depth)
    if lower is None and need_upper is not None and domain_lo is None:
        return DominanceAtZero(j, need_upper - 1)
    return Undetermined(depth)


def pole_order(f: StreamSeries, depth: int, claim: DominanceAtZero | None = None):
    """Classify the singularity at the origin from a depth-``depth`` scan.

    Streams declared finite-below are classified exactly.  Otherwise a
    dominance certificate (computed, or supplied via ``claim``) names the
    lowest exponent; scanned coefficients below it must all vanish -- a
    nonzero one contradicts the certificate and raises, since a forged or
    stale claim must never turn into a meromorphy statement.  Essential
    singularities are only ever reported for streams *declared*
    infinite-below: finitely many coefficients cannot certify one.
    """
    _require_punctured_disc(f)
    scan = f.deepen(depth)

    if claim is not None:
        below = [e for e in scan.support if e < claim.index]
        if below:
            raise ContradictionError(
                f"claimed dominant index {claim.index}, but the scan found a "
                f"nonzero coefficient at exponent {min(below)}")
        if claim.index not in scan.support:
            raise ContradictionError(
                f"claimed dominant index {claim.index} has no nonzero "
                "coefficient in the scan")
        return Meromorphic(claim.index)

    if isinstance(f.shape, FiniteBelow):
        nonzero = sorted(scan.support)
        if not nonzero:
            return Meromorphic(0)  # zero-so-far: the zero-series convention
        return Meromorphic(nonzero[0])

    if f.shape == INFINITE_BELOW:
        negative = sum(1 for e in scan.support if e < 0)
        if negative:
            return Essential(declared=True, scanned_negative_terms=negative)
        return Undetermined(depth)

    result = check_invertible_near_zero(f, depth)
    if isinstance(result, DominanceAtZero):
        return Meromorphic(result.index)
    return Undetermined(depth)


def fiber_pullback(F: LaurentSeries, point: GenericPoint) -> StreamSeries:
    """Evaluate every polynomial coefficient at the point, exactly.

    The point must have one coordinate per variable and lie in the closed
    polydisc (coordinate valuations at least the declared weights); under
    that condition evaluation cannot drop below the Gauss floor, so a tail
    certificate transports unchanged to the pullback.
    """
    ring = F.ring
    if not isinstance(ring, RelativePolynomialRing):
        raise UnsupportedFieldError(
            "fiber pullback needs polynomial coefficients")
    coords = tuple(ring.base.coerce(c) for c in point.coordinates)
    if len(coords) != ring.variable_count:
        raise DimensionMismatchError(
            f"point has {len(coords)} coordinates, series has "
            f"{ring.variable_count} variables")
    for k, (c, u) in enumerate(zip(coords, ring.weights)):
        if ring.base.val(c) < TropVal(u):
            raise DomainError(
                f"coordinate {k + 1} has valuation below the declared "
                f"polyradius weight {u}; the point leaves the closed polydisc")
    values = {e: ring.evaluate(poly, coords) for e, poly in F.support.items()}
    pulled = LaurentSeries(ring.base, values, F.tail)
    return StreamSeries.from_series(pulled)


def discwise_meromorphy(F: LaurentSeries, point: GenericPoint, depth: int):
    """Meromorphy of a relative series, detected on one fiber.

    Pull back at the point and classify the pole there.  On success every
    stored exponent below the detected lowest exponent has a coefficient
    that vanished at the point; since stored coefficients are nonzero
    polynomials, any such exponent means the point was non-generic and is
    reported as an error naming it.  Otherwise the series itself extends
    with the fiber's pole order, and the extension is returned.
    """
    report = pole_order(fiber_pullback(F, point), depth)
    if isinstance(report, Undetermined):
        return report
    if isinstance(report, Essential):
        raise ContradictionError(
            "a finite relative series pulled back to an essential "
            "singularity; certificates are inconsistent")
    j = report.lowest_exponent
    below = sorted(e for e in F.support if e < j)
    if below:
        raise NonGenericPointError(below[0])
    return MeroExtension(pole_order=max(0, -j), regular_part=F.restrict(j))


def descend_kr(f: LaurentSeries) -> LaurentSeries:
    """Strip the auxiliary variables from a series that never uses them.

    Succeeds exactly when every coefficient has auxiliary support {0};
    otherwise raises, naming the first obstructing (exponent, multi-index)
    pair.  The valuation of an aux-constant coefficient is its base
    valuation, so a tail certificate carries over unchanged.
    """
    ring = f.ring
    if not isinstance(ring, PolyradiusExtension):
        raise UnsupportedFieldError(
            "descent needs coefficients in a polyradius extension")
    zero_idx = (0,) * ring.aux_count
    base_support = {}
    for e in sorted(f.support):
        coef = f.support[e]
        for idx, _ in coef.terms:
            if idx != zero_idx:
                raise NontrivialAuxSupportError(e, idx)
        base_support[e] = ring.base_part(coef)
    return LaurentSeries(ring.base, base_support, f.tail)
