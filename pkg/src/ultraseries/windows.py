"""Log-radius windows.

All radii live in log coordinates: a radius ``r`` maps to ``w = -log(r)``
(logarithm in the base that gives the uniformizer absolute value 1/base), so
an annulus ``{R1 <= |T| <= R2}`` becomes the window ``[-log R2, -log R1]``
(note the orientation reversal), the unit circle is ``w = 0``, and
``r -> 0`` corresponds to ``w -> +infinity``.  Endpoints are exact rationals
or unbounded; unbounded ends are always open.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import EmptyWindowError, RepresentationError
from .valuations import as_fraction


@dataclass(frozen=True)
class LogRadiusWindow:
    """An interval of log-radii ``w``; ``None`` endpoints mean unbounded."""

    lo: Fraction | None
    hi: Fraction | None
    lo_open: bool = False
    hi_open: bool = False

    def __post_init__(self):
        lo = None if self.lo is None else as_fraction(self.lo)
        hi = None if self.hi is None else as_fraction(self.hi)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        if lo is None:
            object.__setattr__(self, "lo_open", True)
        if hi is None:
            object.__setattr__(self, "hi_open", True)
        if lo is not None and hi is not None:
            if lo > hi:
                raise EmptyWindowError(f"empty window: {lo} > {hi}")
            if lo == hi and (self.lo_open or self.hi_open):
                raise EmptyWindowError(
                    f"window with equal endpoints {lo} must be closed on both sides")

    @classmethod
    def point(cls, w) -> "LogRadiusWindow":
        w = as_fraction(w)
        return cls(w, w)

    @classmethod
    def closed(cls, lo, hi) -> "LogRadiusWindow":
        return cls(as_fraction(lo), as_fraction(hi))

    @classmethod
    def everything(cls) -> "LogRadiusWindow":
        return cls(None, None)

    @classmethod
    def at_least(cls, lo, open_end=False) -> "LogRadiusWindow":
        """Punctured-disc style window [lo, +inf) (or (lo, +inf))."""
        return cls(as_fraction(lo), None, lo_open=open_end)

    @property
    def is_singleton(self) -> bool:
        return self.lo is not None and self.lo == self.hi

    @property
    def is_bounded(self) -> bool:
        return self.lo is not None and self.hi is not None

    def contains(self, w) -> bool:
        w = as_fraction(w)
        if self.lo is not None:
            if w < self.lo or (w == self.lo and self.lo_open):
                return False
        if self.hi is not None:
            if w > self.hi or (w == self.hi and self.hi_open):
                return False
        return True

    def contains_window(self, other: "LogRadiusWindow") -> bool:
        if other.lo is None and self.lo is not None:
            return False
        if other.hi is None and self.hi is not None:
            return False
        if self.lo is not None and other.lo is not None:
            if other.lo < self.lo:
                return False
            if other.lo == self.lo and self.lo_open and not other.lo_open:
                return False
        if self.hi is not None and other.hi is not None:
            if other.hi > self.hi:
                return False
            if other.hi == self.hi and self.hi_open and not other.hi_open:
                return False
        return True

    def intersect(self, other: "LogRadiusWindow") -> "LogRadiusWindow":
        """Intersection; raises EmptyWindowError when disjoint."""
        if self.lo is None:
            lo, lo_open = other.lo, other.lo_open
        elif other.lo is None or self.lo > other.lo:
            lo, lo_open = self.lo, self.lo_open
        elif self.lo < other.lo:
            lo, lo_open = other.lo, other.lo_open
        else:
            lo, lo_open = self.lo, self.lo_open or other.lo_open
        if self.hi is None:
            hi, hi_open = other.hi, other.hi_open
        elif other.hi is None or self.hi < other.hi:
            hi, hi_open = self.hi, self.hi_open
        elif self.hi > other.hi:
            hi, hi_open = other.hi, other.hi_open
        else:
            hi, hi_open = self.hi, self.hi_open or other.hi_open
        return LogRadiusWindow(lo, hi, lo_open, hi_open)

    def closure(self) -> "LogRadiusWindow":
        return LogRadiusWindow(self.lo, self.hi)

    def __str__(self):
        left = "(" if self.lo_open else "["
        right = ")" if self.hi_open else "]"
        lo = "-inf" if self.lo is None else str(self.lo)
        hi = "+inf" if self.hi is None else str(self.hi)
        return f"{left}{lo}, {hi}{right}"


def parse_window(text: str) -> LogRadiusWindow:
    """Parse ``"[0, 1)"`` style window literals; ``-inf``/``+inf`` allowed."""
    s = text.strip()
    if len(s) < 2 or s[0] not in "[(" or s[-1] not in "])":
        raise RepresentationError(f"bad window literal {text!r}")
    lo_open = s[0] == "("
    hi_open = s[-1] == ")"
    body = s[1:-1].split(",")
    if len(body) != 2:
        raise RepresentationError(f"window needs two endpoints: {text!r}")

    def endpoint(part, infinity_words):
        part = part.strip()
        if part in infinity_words:
            return None
        try:
            return Fraction(part)
        except (ValueError, ZeroDivisionError) as exc:
            raise RepresentationError(f"bad window endpoint {part!r}") from exc

    lo = endpoint(body[0], ("-inf", "-oo"))
    hi = endpoint(body[1], ("+inf", "inf", "+oo", "oo"))
    return LogRadiusWindow(lo, hi, lo_open, hi_open)
