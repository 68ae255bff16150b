"""Job files: a line-oriented description of one analysis task.

A job file declares a coefficient field, one series (absolute, relative, or
stream-by-rule), an optional window and command parameters, and the command
to run.  Rationals are always written as exact strings; no floats appear on
either side of the interface.  Grammar by example::

    # comments and blank lines are ignored
    field padic 5                 # | field laurent gf 5 s 8
                                  # | field laurent rationals s 8
                                  # | field padic 5 aux 2
    series                        # finite Laurent data: <exponent> <coefficient>
      -1 7/50
      0 1
    end
    window [0, 1)                 # endpoints rational or -inf/+inf
    prec 3
    depth 12
    command unit

Alternative series sections::

    weights 0 1/2                 # optional, before relseries
    relseries 2                   # relative series in y1..y2
      -1 y1
      0 1
    end

    stream table finite_below     # declared-shape stream from a term table
      -3 1
      0 1
    end

    stream table unknown          # + optional "floor 0" line after "end"
    stream rule val_squares       # a_{-i} = uniformizer^(i^2), infinite below

    point 1 2/3                   # sample coordinates, for discwise

Unknown keys are rejected; every error carries its line number.  Parsing is
deterministic and ``serialize_job`` emits a canonical form, so
parse-serialize is idempotent.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction

from .errors import (
    JobParseError,
    JobSemanticError,
    RepresentationError,
    UltraseriesError,
)
from .fields import (
    FormalLaurent,
    PAdicRationals,
    PolyradiusExtension,
    PrimeField,
    Rationals,
)
from .relative import RelativePolynomialRing
from .series import INFINITE_BELOW, LaurentSeries, StreamSeries, UNKNOWN
from .valuations import TropVal
from .windows import LogRadiusWindow, parse_window

COMMANDS = ("newton", "unit", "invert", "pole", "discwise", "descend")
STREAM_RULES = ("val_squares",)


@dataclass
class JobFile:
    """One parsed job: the field, the series, and the command parameters."""

    field: object
    series_kind: str            # "laurent" | "relative" | "stream"
    series: object              # LaurentSeries or StreamSeries
    command: str
    window: LogRadiusWindow | None = None
    point: tuple | None = None
    prec: Fraction | None = None
    depth: int | None = None
    weights: tuple | None = None
    stream_shape: str | None = None   # for serialization
    stream_rule: str | None = None
    stream_floor: Fraction | None = None
    terms: list = dataclass_field(default_factory=list)  # raw (exp, text)


def _split_terms(lines, start, errline):
    """Collect indented ``<exponent> <literal>`` lines until ``end``."""
    terms = []
    i = start
    while i < len(lines):
        no, text = lines[i]
        if text == "end":
            return terms, i + 1
        parts = text.split(None, 1)
        if len(parts) != 2:
            raise JobParseError("term line needs '<exponent> <coefficient>'",
                                no)
        try:
            exponent = int(parts[0])
        except ValueError:
            raise JobParseError(f"bad exponent {parts[0]!r}", no) from None
        terms.append((no, exponent, parts[1].strip()))
        i += 1
    raise JobParseError("series section never closed with 'end'", errline)


def _parse_field(parts, no):
    if not parts:
        raise JobParseError("field line needs a kind", no)
    kind, rest = parts[0], parts[1:]
    if kind == "padic":
        if not rest:
            raise JobParseError("'field padic' needs a prime", no)
        try:
            p = int(rest[0])
        except ValueError:
            raise JobParseError(f"bad prime {rest[0]!r}", no) from None
        try:
            base = PAdicRationals(p)
        except RepresentationError as exc:
            raise JobSemanticError(str(exc), no) from None
        if len(rest) == 1:
            return base
        if len(rest) == 3 and rest[1] == "aux":
            try:
                n = int(rest[2])
            except ValueError:
                raise JobParseError(f"bad aux count {rest[2]!r}", no) from None
            try:
                return PolyradiusExtension(base, n)
            except RepresentationError as exc:
                raise JobSemanticError(str(exc), no) from None
        raise JobParseError(f"unrecognized field tail {rest[1:]!r}", no)
    if kind == "laurent":
        if len(rest) < 3:
            raise JobParseError(
                "'field laurent' needs: <residue> [p] <symbol> <truncation>",
                no)
        if rest[0] == "rationals":
            residue, tail = Rationals(), rest[1:]
        elif rest[0] == "gf":
            if len(rest) < 4:
                raise JobParseError("'field laurent gf' needs a prime", no)
            try:
                residue = PrimeField(int(rest[1]))
            except ValueError:
                raise JobParseError(f"bad prime {rest[1]!r}", no) from None
            except RepresentationError as exc:
                raise JobSemanticError(str(exc), no) from None
            tail = rest[2:]
        else:
            raise JobParseError(f"unknown residue {rest[0]!r}", no)
        symbol = tail[0]
        try:
            order = int(tail[1])
        except (IndexError, ValueError):
            raise JobParseError("bad or missing truncation order", no) from None
        try:
            return FormalLaurent(residue, symbol, order)
        except RepresentationError as exc:
            raise JobSemanticError(str(exc), no) from None
    raise JobParseError(f"unknown field kind {kind!r}", no)


def _build_series(ring, raw_terms):
    support = {}
    for no, exponent, literal in raw_terms:
        if exponent in support:
            raise JobSemanticError(f"duplicate exponent {exponent}", no)
        try:
            support[exponent] = ring.parse(literal) if hasattr(ring, "parse") \
                else ring.coerce(literal)
        except (UltraseriesError, ValueError, ZeroDivisionError) as exc:
            raise JobSemanticError(
                f"bad coefficient {literal!r}: {exc}", no) from None
    return LaurentSeries(ring, support)


def parse_job(text: str) -> JobFile:
    """Parse one job; raises JobParseError / JobSemanticError with positions."""
    lines = []
    for no, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            lines.append((no, stripped))

    field = None
    series_kind = None
    raw_terms: list = []
    weights = None
    rel_vars = None
    stream_shape = None
    stream_rule = None
    stream_floor = None
    window = None
    point_raw = None
    prec = None
    depth = None
    command = None
    seen = set()

    def once(key, no):
        if key in seen:
            raise JobParseError(f"duplicate section {key!r}", no)
        seen.add(key)

    i = 0
    while i < len(lines):
        no, text_line = lines[i]
        parts = text_line.split()
        key = parts[0]
        if key == "field":
            once("field", no)
            field = _parse_field(parts[1:], no)
            i += 1
        elif key == "weights":
            once("weights", no)
            try:
                weights = tuple(Fraction(x) for x in parts[1:])
            except (ValueError, ZeroDivisionError):
                raise JobSemanticError("bad weight literal", no) from None
            i += 1
        elif key == "series":
            once("series", no)
            if len(parts) != 1:
                raise JobParseError("'series' takes no arguments", no)
            series_kind = "laurent"
            raw_terms, i = _split_terms(lines, i + 1, no)
        elif key == "relseries":
            once("series", no)
            if len(parts) != 2:
                raise JobParseError("'relseries' needs a variable count", no)
            try:
                rel_vars = int(parts[1])
            except ValueError:
                raise JobParseError(f"bad variable count {parts[1]!r}", no) from None
            series_kind = "relative"
            raw_terms, i = _split_terms(lines, i + 1, no)
        elif key == "stream":
            once("series", no)
            series_kind = "stream"
            if len(parts) >= 2 and parts[1] == "table":
                if len(parts) != 3 or parts[2] not in ("finite_below", "unknown"):
                    raise JobParseError(
                        "'stream table' needs a shape: finite_below | unknown",
                        no)
                stream_shape = parts[2]
                raw_terms, i = _split_terms(lines, i + 1, no)
            elif len(parts) == 3 and parts[1] == "rule":
                if parts[2] not in STREAM_RULES:
                    raise JobParseError(
                        f"unknown stream rule {parts[2]!r}", no)
                stream_rule = parts[2]
                i += 1
            else:
                raise JobParseError("'stream' needs 'table <shape>' or "
                                    "'rule <name>'", no)
        elif key == "floor":
            once("floor", no)
            if len(parts) != 2:
                raise JobParseError("'floor' needs one rational", no)
            try:
                stream_floor = Fraction(parts[1])
            except (ValueError, ZeroDivisionError):
                raise JobSemanticError(f"bad floor {parts[1]!r}", no) from None
            i += 1
        elif key == "window":
            once("window", no)
            try:
                window = parse_window(text_line[len("window"):])
            except UltraseriesError as exc:
                raise JobSemanticError(str(exc), no) from None
            i += 1
        elif key == "point":
            once("point", no)
            point_raw = tuple(parts[1:])
            if not point_raw:
                raise JobParseError("'point' needs coordinates", no)
            i += 1
        elif key == "prec":
            once("prec", no)
            try:
                prec = Fraction(parts[1])
            except (IndexError, ValueError, ZeroDivisionError):
                raise JobSemanticError("bad prec literal", no) from None
            i += 1
        elif key == "depth":
            once("depth", no)
            try:
                depth = int(parts[1])
            except (IndexError, ValueError):
                raise JobParseError("bad depth literal", no) from None
            i += 1
        elif key == "command":
            once("command", no)
            if len(parts) != 2 or parts[1] not in COMMANDS:
                raise JobParseError(
                    f"command must be one of {', '.join(COMMANDS)}", no)
            command = parts[1]
            i += 1
        else:
            raise JobParseError(f"unknown key {key!r}", no)

    if field is None:
        raise JobParseError("missing 'field' line", 1)
    if command is None:
        raise JobParseError("missing 'command' line", 1)
    if series_kind is None:
        raise JobParseError("missing series section", 1)

    # build the series object
    if series_kind == "laurent":
        series = _build_series(field, raw_terms)
    elif series_kind == "relative":
        ring = RelativePolynomialRing(field, rel_vars, weights or ())
        series = _build_series(ring, raw_terms)
    else:
        series = _build_stream(field, raw_terms, stream_shape, stream_rule,
                               stream_floor)

    point = None
    if point_raw is not None:
        try:
            point = tuple(Fraction(x) for x in point_raw)
        except (ValueError, ZeroDivisionError):
            raise JobSemanticError("bad point coordinate") from None

    job = JobFile(field=field, series_kind=series_kind, series=series,
                  command=command, window=window, point=point, prec=prec,
                  depth=depth, weights=weights, stream_shape=stream_shape,
                  stream_rule=stream_rule, stream_floor=stream_floor,
                  terms=[(e, lit) for _, e, lit in raw_terms])
    return job


def _build_stream(field, raw_terms, shape, rule, floor):
    if rule == "val_squares":
        # sum over i >= 0 of uniformizer^(i^2) * T^(-i): entire in 1/T but
        # not a polynomial, the textbook essential singularity at the origin
        if isinstance(field, PAdicRationals):
            def coefficient(k, p=field.p):
                return Fraction(p) ** (k * k) if k <= 0 else Fraction(0)
        elif isinstance(field, FormalLaurent):
            def coefficient(k, K=field):
                if k > 0:
                    return K.zero()
                return K.element({k * k: K.residue.one()})
        else:
            raise JobSemanticError("val_squares needs a padic or laurent field")
        return StreamSeries(field, coefficient, shape=INFINITE_BELOW,
                            domain=LogRadiusWindow.at_least(0))
    table = _build_series(field, raw_terms)
    if shape == "finite_below":
        return StreamSeries.from_series(table)
    # declared-unknown table: certificate floor on [0, +inf) is the caller's
    # assertion about everything beyond the listed window
    floor_val = TropVal(floor if floor is not None else 0)
    lo = min(table.support) if table.support else 0
    hi = max(table.support) if table.support else 0
    window = (min(lo, -1), max(hi, 1))
    return StreamSeries(
        field, lambda e: table.support.get(e, field.zero()),
        shape=UNKNOWN, domain=LogRadiusWindow.at_least(0),
        window_fn=lambda d: window, floor_fn=lambda d: floor_val)


def serialize_job(job: JobFile) -> str:
    """Canonical text for a job; parse . serialize is idempotent."""
    out = []
    field = job.field
    if isinstance(field, PolyradiusExtension):
        out.append(f"field padic {field.base.p} aux {field.aux_count}")
    elif isinstance(field, PAdicRationals):
        out.append(f"field padic {field.p}")
    elif isinstance(field, FormalLaurent):
        if isinstance(field.residue, Rationals):
            out.append(f"field laurent rationals {field.uniformizer} "
                       f"{field.truncation_order}")
        else:
            out.append(f"field laurent gf {field.residue.p} "
                       f"{field.uniformizer} {field.truncation_order}")
    if job.weights is not None:
        out.append("weights " + " ".join(str(w) for w in job.weights))
    if job.series_kind == "laurent":
        out.append("series")
    elif job.series_kind == "relative":
        out.append(f"relseries {job.series.ring.variable_count}")
    elif job.stream_rule is not None:
        out.append(f"stream rule {job.stream_rule}")
    else:
        out.append(f"stream table {job.stream_shape}")
    if job.series_kind != "stream" or job.stream_rule is None:
        ring = job.series.ring if job.series_kind != "stream" else job.field
        for e, lit in sorted(job.terms):
            canonical = ring.format(ring.parse(lit)) if hasattr(ring, "parse") \
                else lit
            out.append(f"  {e} {canonical}")
        out.append("end")
    if job.stream_floor is not None:
        out.append(f"floor {job.stream_floor}")
    if job.window is not None:
        out.append(f"window {job.window}")
    if job.point is not None:
        out.append("point " + " ".join(str(c) for c in job.point))
    if job.prec is not None:
        out.append(f"prec {job.prec}")
    if job.depth is not None:
        out.append(f"depth {job.depth}")
    out.append(f"command {job.command}")
    return "\n".join(out) + "\n"
