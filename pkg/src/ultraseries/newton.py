"""Tropical minimization, Newton polygons, and dominant monomials.

Everything here works in log coordinates (see :mod:`ultraseries.windows`):
on the circle of log-radius ``w`` the size of a term ``a_i T^i`` is measured
by its tropical value ``v(a_i) + i*w``, and *smaller value = larger term*.
The three classical observations this module computes with:

* ``w -> min_i (v(a_i) + i*w)`` is concave piecewise-linear; its shape is the
  lower convex hull of the points ``(i, v(a_i))`` (the Newton polygon), and
  the minimizing index can only change at ``w = -slope`` of a hull segment.
* A series is invertible on a window exactly when a single index strictly
  minimizes the tropical value at every ``w`` of the window; because each
  term is affine in ``w``, checking the two window endpoints (with limit
  minimizers at open or infinite ends) decides the whole window.
* At a single radius, the minimizing indices together with the residue
  images of their normalized coefficients are the reduction of the series;
  the series is a unit there iff that reduction is a single monomial.

Orientation table, fixed throughout the package:

    radius r        log-radius w = -log r
    r -> 0          w -> +infinity
    |T| = 1         w = 0
    {R1<=|T|<=R2}   [-log R2, -log R1]
    root of T - c   tie at w = v(c); polygon slope -v(c)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DomainError,
    EmptyWindowError,
    PrecisionError,
    RepresentationError,
    UnsupportedFieldError,
    ZeroSeriesError,
)
from .fields import FormalLaurent, PAdicRationals
from .series import LaurentSeries
from .valuations import INFINITY, TropVal, as_fraction
from .windows import LogRadiusWindow


# ---------------------------------------------------------------------------
# result types


@dataclass(frozen=True)
class NewtonPolygon:
    """Lower convex hull of the (exponent, valuation) support points.

    ``vertices`` are exponent-increasing, ``slopes[t]`` is the slope of the
    segment from ``vertices[t]`` to ``vertices[t+1]``; slopes increase
    strictly.  Support points may sit on a segment without being vertices.
    """

    points: tuple[tuple[int, Fraction], ...]
    vertices: tuple[tuple[int, Fraction], ...]
    slopes: tuple[Fraction, ...]

    def segments(self):
        return [(self.vertices[t], self.vertices[t + 1], self.slopes[t])
                for t in range(len(self.slopes))]

    def breakpoints(self) -> list[Fraction]:
        """Log-radii where the minimizer changes: the negated slopes,
        increasing."""
        return sorted(-s for s in self.slopes)


@dataclass(frozen=True)
class DominanceCertificate:
    """Index ``j`` strictly minimizes the tropical value on the window.

    ``gap`` is the runner-up margin (second smallest minus smallest term
    value) minimized over the window's critical radii: closed finite
    endpoints and interior crossing radii.  On a closed bounded window this
    is the exact uniform margin; when the window has an open endpoint where
    the margin degenerates to 0, the stored gap is only attained away from
    that endpoint (uniform bounds then exist on every compact subwindow).
    """

    index: int
    gap: TropVal


@dataclass(frozen=True)
class TieWitness:
    """Two or more indices attain the minimum at log-radius ``w``."""

    w: Fraction
    indices: tuple[int, ...]


@dataclass(frozen=True)
class NoDominance:
    """Different indices win at the two window ends; ``w`` is an interior
    radius where the minimum is tied between pieces."""

    w: Fraction
    indices: tuple[int, ...]


@dataclass(frozen=True)
class ProfilePiece:
    """A maximal subwindow with one minimizer, or a one-point tie."""

    window: LogRadiusWindow
    indices: tuple[int, ...]

    @property
    def is_tie(self) -> bool:
        return len(self.indices) > 1

    @property
    def index(self) -> int:
        if self.is_tie:
            raise ValueError("tie piece has no single minimizer")
        return self.indices[0]


# ---------------------------------------------------------------------------
# term bookkeeping


def _term_list(f: LaurentSeries) -> list[tuple[int, Fraction]]:
    """(exponent, valuation) pairs with rational valuations, sorted."""
    terms = []
    for e, c in sorted(f.support.items()):
        v = f.ring.val(c)
        if not isinstance(v, TropVal):
            raise UnsupportedFieldError(
                "tropical analysis needs a rank-1 valued coefficient ring")
        if v.is_infinite:
            raise ValueError("stored coefficient with infinite valuation")
        terms.append((e, v.q))
    return terms


def _argmin_at(terms, w: Fraction):
    """(minimal value, indices attaining it) at log-radius w."""
    best = None
    indices = []
    for e, v in terms:
        value = v + e * w
        if best is None or value < best:
            best, indices = value, [e]
        elif value == best:
            indices.append(e)
    return best, indices


def _stored_min_value(f: LaurentSeries, w: Fraction) -> TropVal:
    terms = []
    for e, c in f.support.items():
        v = f.ring.val(c)
        terms.append(v + TropVal(w * e))
    return min(terms) if terms else INFINITY


def _check_tail_at(f: LaurentSeries, w: Fraction):
    """Tail admissibility at one radius: domain membership and a floor
    strictly above the stored minimum (omitted terms must not compete)."""
    if f.tail is None:
        return
    if not f.tail.domain.contains(w):
        raise DomainError(
            f"log-radius {w} lies outside the certificate domain "
            f"{f.tail.domain}")
    if f.tail.floor.is_infinite:
        return
    stored = _stored_min_value(f, w)
    if not f.tail.floor > stored:
        raise PrecisionError(
            f"tail floor {f.tail.floor} does not exceed the stored minimum "
            f"{stored} at w={w}; omitted terms could dominate")


# ---------------------------------------------------------------------------
# operations


def tropicalize(f: LaurentSeries, w) -> TropVal:
    """min over the support of v(a_i) + i*w; infinity for the zero series."""
    w = as_fraction(w)
    if f.tail is not None:
        _check_tail_at(f, w)
    return _stored_min_value(f, w)


def newton_polygon(f: LaurentSeries) -> NewtonPolygon:
    """Lower hull of the support points, via a monotone chain.

    Collinear interior points are dropped from the vertex list (slopes must
    increase strictly), but remain visible in ``points``.
    """
    terms = _term_list(f)
    if not terms:
        raise ZeroSeriesError("the zero series has no Newton polygon")
    vertices: list[tuple[int, Fraction]] = []
    for p in terms:
        while len(vertices) >= 2:
            (x1, y1), (x2, y2) = vertices[-2], vertices[-1]
            if (x2 - x1) * (p[1] - y1) - (y2 - y1) * (p[0] - x1) <= 0:
                vertices.pop()
            else:
                break
        vertices.append(p)
    slopes = tuple(
        Fraction(vertices[t + 1][1] - vertices[t][1],
                 vertices[t + 1][0] - vertices[t][0])
        for t in range(len(vertices) - 1))
    return NewtonPolygon(tuple(terms), tuple(vertices), slopes)


def _pairwise_crossings(terms) -> set[Fraction]:
    """Radii where two distinct term lines meet."""
    out = set()
    for a in range(len(terms)):
        e1, v1 = terms[a]
        for b in range(a + 1, len(terms)):
            e2, v2 = terms[b]
            out.add(Fraction(v1 - v2, e2 - e1))
    return out


def _envelope_sup(terms, window: LogRadiusWindow):
    """sup over the closure of the lower envelope min_i(v_i + i*w).

    Returns a Fraction, or None when the supremum is +infinity (possible
    only on unbounded windows).  The envelope is concave, so the sup sits at
    an endpoint or at an interior envelope breakpoint.
    """
    lo_exp = min(e for e, _ in terms)
    hi_exp = max(e for e, _ in terms)
    if window.hi is None and lo_exp > 0:
        return None
    if window.lo is None and hi_exp < 0:
        return None
    candidates = []
    if window.lo is not None:
        candidates.append(window.lo)
    if window.hi is not None:
        candidates.append(window.hi)
    for w in _pairwise_crossings(terms):
        if window.contains(w):
            candidates.append(w)
    if not candidates:
        # window is all of R and the envelope is bounded: single exponent 0
        return terms[0][1] if lo_exp == hi_exp == 0 else None
    return max(_argmin_at(terms, w)[0] for w in candidates)


def _check_tail_on_window(f: LaurentSeries, window: LogRadiusWindow, terms):
    if f.tail is None:
        return
    if not f.tail.domain.contains_window(window):
        raise DomainError(
            f"window {window} is not covered by the certificate domain "
            f"{f.tail.domain}")
    if f.tail.floor.is_infinite:
        return
    sup = _envelope_sup(terms, window)
    if sup is None or not f.tail.floor > TropVal(sup):
        raise PrecisionError(
            "tail floor does not stay strictly above the dominating value "
            "on the window; omitted terms could compete")


def _runner_up_margin(terms, j: int, w: Fraction) -> TropVal:
    """Second-smallest minus smallest term value at w (j must be the
    unique minimizer there)."""
    lead = None
    second = None
    for e, v in terms:
        value = v + e * w
        if e == j:
            lead = value
        elif second is None or value < second:
            second = value
    if second is None:
        return INFINITY
    return TropVal(second - lead)


def _certificate_gap(terms, j: int, window: LogRadiusWindow) -> TropVal:
    candidates = []
    if window.lo is not None and not window.lo_open:
        candidates.append(window.lo)
    if window.hi is not None and not window.hi_open:
        candidates.append(window.hi)
    lo_strict = window.lo
    hi_strict = window.hi
    for w in _pairwise_crossings(terms):
        if (lo_strict is None or w > lo_strict) and (hi_strict is None or w < hi_strict):
            candidates.append(w)
    if not candidates:
        # fully open window, margin affine on it: bound at a representative
        if window.lo is not None and window.hi is not None:
            candidates.append((window.lo + window.hi) / 2)
        elif window.lo is not None:
            candidates.append(window.lo + 1)
        elif window.hi is not None:
            candidates.append(window.hi - 1)
        else:
            candidates.append(Fraction(0))
    return min(_runner_up_margin(terms, j, w) for w in candidates)


def closure_gap_infimum(f: LaurentSeries, j: int, window: LogRadiusWindow) -> TropVal:
    """Infimum over the window closure of the runner-up margin for j.

    This is the uniform bound certified inversion needs; it is 0 exactly
    when another index ties j at an open endpoint.  At unbounded ends the
    margin grows without bound, so only finite endpoints matter.
    """
    terms = _term_list(f)
    if len(terms) <= 1:
        return INFINITY
    candidates = []
    if window.lo is not None:
        candidates.append(window.lo)
    if window.hi is not None:
        candidates.append(window.hi)
    # concavity: the infimum over an interval sits at its ends
    if not candidates:
        return INFINITY if len(terms) == 1 else TropVal(0)
    return min(_runner_up_margin(terms, j, w) for w in candidates)


def dominant_monomial(f: LaurentSeries, window: LogRadiusWindow):
    """Decide whether one index strictly minimizes on the whole window.

    Returns a :class:`DominanceCertificate`, a :class:`TieWitness` (tie at a
    closed endpoint or, for refutations, at an interior breakpoint), or
    :class:`NoDominance` when the two window ends are won by different
    indices.  Ties exactly at an *open* endpoint do not refute dominance.
    Endpoint reasoning suffices because term values are affine in w; at open
    or infinite ends the limiting minimizer is used (w -> +inf: least
    exponent; w -> -inf: greatest).
    """
    terms = _term_list(f)
    if not terms:
        raise ZeroSeriesError("the zero series has no dominant monomial")
    _check_tail_on_window(f, window, terms)

    if window.lo is None:
        j_lo = max(e for e, _ in terms)
    else:
        _, indices = _argmin_at(terms, window.lo)
        if len(indices) > 1 and not window.lo_open:
            return TieWitness(window.lo, tuple(sorted(indices)))
        j_lo = min(indices)
    if window.hi is None:
        j_hi = min(e for e, _ in terms)
    else:
        _, indices = _argmin_at(terms, window.hi)
        if len(indices) > 1 and not window.hi_open:
            return TieWitness(window.hi, tuple(sorted(indices)))
        j_hi = max(indices)

    if j_lo != j_hi:
        polygon_breaks = newton_polygon(f).breakpoints()
        interior = [w for w in polygon_breaks
                    if (window.lo is None or w > window.lo)
                    and (window.hi is None or w < window.hi)]
        # the minimizer changes inside, so an envelope tie exists there
        w_star = interior[0]
        _, tied = _argmin_at(terms, w_star)
        return NoDominance(w_star, tuple(sorted(tied)))

    return DominanceCertificate(j_lo, _certificate_gap(terms, j_lo, window))


def minimizer_profile(f: LaurentSeries, window: LogRadiusWindow) -> list[ProfilePiece]:
    """Partition the window into maximal one-minimizer pieces and tie points.

    The minimizing index is the hull vertex active at w and changes exactly
    at the negated hull slopes, dropping as w grows; at a tie radius the
    minimizing set is every support point lying on that hull segment.
    """
    terms = _term_list(f)
    if not terms:
        raise ZeroSeriesError("the zero series has no minimizer profile")
    polygon = newton_polygon(f)
    vertices = polygon.vertices
    # pieces in increasing w: greatest exponent first, then down the hull
    breaks = [-s for s in polygon.slopes]      # decreasing in t
    pieces: list[ProfilePiece] = []
    k = len(vertices) - 1

    def clipped(lo, hi, index) -> ProfilePiece | None:
        try:
            piece = LogRadiusWindow(lo, hi, True, True).intersect(window)
        except EmptyWindowError:
            return None
        return ProfilePiece(piece, (index,))

    def tie_indices(t: int) -> tuple[int, ...]:
        (x1, y1), slope = vertices[t], polygon.slopes[t]
        return tuple(e for e, v in terms if v - y1 == slope * (e - x1))

    bounds = [None] + [breaks[t] for t in range(k - 1, -1, -1)] + [None]
    piece_vertices = [vertices[t][0] for t in range(k, -1, -1)]
    for n, index in enumerate(piece_vertices):
        piece = clipped(bounds[n], bounds[n + 1], index)
        if piece is not None:
            pieces.append(piece)
        if n + 1 < len(bounds) - 1:
            w_tie = bounds[n + 1]
            if window.contains(w_tie):
                t = k - 1 - n
                pieces.append(ProfilePiece(LogRadiusWindow.point(w_tie),
                                           tie_indices(t)))
    return pieces


def residue_leading_part(f: LaurentSeries, w):
    """Minimizing indices at w with residue images of their unit parts.

    Each minimizing coefficient is divided by a uniformizer power of exactly
    its valuation, then reduced; the series is a unit at this radius iff a
    single index comes back.  Needs w in the value group generated by 1
    (i.e. an integer), since the normalizing rescaling T -> pi^w T must stay
    inside the field.
    """
    w = as_fraction(w)
    if w.denominator != 1:
        raise RepresentationError(
            f"log-radius {w} is not in the value group generated by 1; "
            "no normalizer of fractional valuation exists in the field")
    terms = _term_list(f)
    if not terms:
        raise ZeroSeriesError("the zero series has no leading part")
    _check_tail_at(f, w)
    ring = f.ring
    if isinstance(ring, PAdicRationals):
        def unit_residue(c):
            return ring.residue(ring.normalize_unit(c))
    elif isinstance(ring, FormalLaurent):
        def unit_residue(c):
            return ring.residue_image(ring.normalize_unit(c))
    else:
        raise UnsupportedFieldError(
            "residue reduction needs a p-adic or Laurent coefficient field")
    _, indices = _argmin_at(terms, w)
    indices = tuple(sorted(indices))
    return indices, {e: unit_residue(f.support[e]) for e in indices}
