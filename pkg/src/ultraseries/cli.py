"""Batch front end: run one job file, emit a JSON report.

Usage::

    ultraseries <command> <jobfile> [--svg PATH] [--csv PATH]
                [--depth N] [--prec Q]

The report goes to stdout as JSON with a fixed key order; every rational is
a string ``"num/den"`` with positive denominator (integers print bare), so
identical jobs produce byte-identical reports.  Errors go to stderr as JSON
with a stable ``error`` code.  Exit codes: 0 when the analysis decided,
2 when it returned undetermined, 1 on error.

``--svg`` draws the Newton polygon in the (exponent, valuation) plane with
hull vertices and tie radii annotated; ``--csv`` samples (w, tropical value,
minimizer) rows over the window.  Both are exact: coordinates are rendered
from rationals by integer arithmetic only.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .annuli import AnnulusDomain, invert, is_unit
from .errors import JobSemanticError, UltraseriesError
from .jobfile import JobFile, parse_job
from .mero import (
    Essential,
    GenericPoint,
    Meromorphic,
    MeroExtension,
    descend_kr,
    discwise_meromorphy,
    pole_order,
)
from .newton import (
    DominanceCertificate,
    NoDominance,
    TieWitness,
    newton_polygon,
)
from .series import LaurentSeries, StreamSeries, Undetermined
from .valuations import TropVal
from .windows import LogRadiusWindow

DEFAULT_DEPTH = 8
DEFAULT_PREC = Fraction(10)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_UNDETERMINED = 2


def _rat(x) -> str:
    if isinstance(x, TropVal):
        return "inf" if x.is_infinite else str(x.q)
    return str(Fraction(x))


def _witness_json(witness):
    if isinstance(witness, DominanceCertificate):
        return {"kind": "dominant", "j": witness.index, "gap": _rat(witness.gap)}
    if isinstance(witness, TieWitness):
        return {"kind": "tie", "w": _rat(witness.w),
                "indices": list(witness.indices)}
    if isinstance(witness, NoDominance):
        return {"kind": "split", "w": _rat(witness.w),
                "indices": list(witness.indices)}
    raise TypeError(f"unknown witness {witness!r}")


def _series_terms_json(f: LaurentSeries):
    return [[e, f.ring.format(c)] for e, c in sorted(f.support.items())]


def _require_window(job: JobFile) -> LogRadiusWindow:
    if job.window is None:
        raise JobSemanticError(f"command {job.command!r} needs a window")
    return job.window


def _require_laurent(job: JobFile) -> LaurentSeries:
    if job.series_kind != "laurent":
        raise JobSemanticError(
            f"command {job.command!r} needs a finite 'series' section")
    return job.series


def run_job(job: JobFile, depth: int | None = None, prec=None):
    """Execute the job; returns (report dict, exit code, polygon-or-None)."""
    depth = depth if depth is not None else (job.depth or DEFAULT_DEPTH)
    prec = prec if prec is not None else (job.prec or DEFAULT_PREC)
    command = job.command

    if command == "newton":
        f = _require_laurent(job)
        polygon = newton_polygon(f)
        report = {
            "command": "newton",
            "support": [[e, _rat(v)] for e, v in polygon.points],
            "vertices": [[e, _rat(v)] for e, v in polygon.vertices],
            "slopes": [_rat(s) for s in polygon.slopes],
            "tie_radii": [_rat(w) for w in polygon.breakpoints()],
        }
        return report, EXIT_OK, polygon

    if command == "unit":
        f = _require_laurent(job)
        window = _require_window(job)
        unit, witness = is_unit(f, AnnulusDomain(window, job.field))
        report = {
            "command": "unit",
            "window": str(window),
            "unit": unit,
            "witness": _witness_json(witness),
        }
        return report, EXIT_OK, newton_polygon(f)

    if command == "invert":
        f = _require_laurent(job)
        window = _require_window(job)
        g = invert(f, AnnulusDomain(window, job.field), prec)
        report = {
            "command": "invert",
            "window": str(window),
            "prec": _rat(prec),
            "terms": _series_terms_json(g),
            "tail_floor": _rat(g.tail.floor) if g.tail is not None else "inf",
        }
        return report, EXIT_OK, newton_polygon(f)

    if command == "pole":
        if job.series_kind == "laurent":
            stream = StreamSeries.from_series(job.series)
        elif job.series_kind == "stream":
            stream = job.series
        else:
            raise JobSemanticError("'pole' needs an absolute series or stream")
        result = pole_order(stream, depth)
        if isinstance(result, Meromorphic):
            report = {
                "command": "pole",
                "status": "meromorphic",
                "lowest_exponent": result.lowest_exponent,
                "pole_order": result.pole_order,
            }
            return report, EXIT_OK, None
        if isinstance(result, Essential):
            report = {
                "command": "pole",
                "status": "essential",
                "scanned_negative_terms": result.scanned_negative_terms,
            }
            return report, EXIT_OK, None
        report = {"command": "pole", "status": "undetermined",
                  "depth": result.depth}
        return report, EXIT_UNDETERMINED, None

    if command == "discwise":
        if job.series_kind != "relative":
            raise JobSemanticError("'discwise' needs a 'relseries' section")
        if job.point is None:
            raise JobSemanticError("'discwise' needs a 'point' line")
        result = discwise_meromorphy(job.series, GenericPoint(job.point), depth)
        if isinstance(result, Undetermined):
            report = {"command": "discwise", "status": "undetermined",
                      "depth": result.depth}
            return report, EXIT_UNDETERMINED, None
        assert isinstance(result, MeroExtension)
        ring = result.regular_part.ring
        report = {
            "command": "discwise",
            "status": "extension",
            "pole_order": result.pole_order,
            "regular_part": [[e, ring.format(c)] for e, c
                             in sorted(result.regular_part.support.items())],
        }
        return report, EXIT_OK, None

    if command == "descend":
        if job.series_kind != "laurent":
            raise JobSemanticError("'descend' needs a 'series' section over "
                                   "an aux field")
        base = descend_kr(job.series)
        report = {
            "command": "descend",
            "terms": [[e, base.ring.format(c)] for e, c
                      in sorted(base.support.items())],
        }
        return report, EXIT_OK, None

    raise JobSemanticError(f"unknown command {command!r}")


# ---------------------------------------------------------------------------
# exact decimal rendering for SVG/CSV (integer arithmetic only)


def _dec(x: Fraction, places: int = 3) -> str:
    n = round(x * 10 ** places)  # exact integer rounding on a Fraction
    sign = "-" if n < 0 else ""
    digits = str(abs(n)).rjust(places + 1, "0")
    whole, frac = digits[:-places], digits[-places:]
    frac = frac.rstrip("0")
    return f"{sign}{whole}.{frac}" if frac else f"{sign}{whole}"


def render_polygon_svg(polygon) -> str:
    """The (exponent, valuation) plane: support dots, lower hull, tie labels."""
    xs = [Fraction(e) for e, _ in polygon.points]
    ys = [Fraction(v) for _, v in polygon.points]
    x_lo, x_hi = min(xs), max(xs)
    y_lo, y_hi = min(ys), max(ys)
    span_x = max(x_hi - x_lo, Fraction(1))
    span_y = max(y_hi - y_lo, Fraction(1))
    scale_x = Fraction(320) / span_x
    scale_y = Fraction(240) / span_y
    margin = Fraction(40)

    def px(e):
        return margin + (Fraction(e) - x_lo) * scale_x

    def py(v):
        # valuation axis points up; svg y points down
        return margin + (y_hi - Fraction(v)) * scale_y

    parts = ['<svg xmlns="http://www.w3.org/2000/svg" width="400" height="320" '
             'viewBox="0 0 400 320">',
             '<rect width="400" height="320" fill="white"/>']
    hull_pts = " ".join(f"{_dec(px(e))},{_dec(py(v))}"
                        for e, v in polygon.vertices)
    parts.append(f'<polyline points="{hull_pts}" fill="none" stroke="black" '
                 'stroke-width="2"/>')
    for e, v in polygon.points:
        parts.append(f'<circle cx="{_dec(px(e))}" cy="{_dec(py(v))}" r="4" '
                     'fill="steelblue"/>')
    for e, v in polygon.vertices:
        parts.append(f'<text x="{_dec(px(e) + 6)}" y="{_dec(py(v) - 6)}" '
                     f'font-size="11">({e}, {v})</text>')
    for (p1, p2, slope) in polygon.segments():
        mx = (px(p1[0]) + px(p2[0])) / 2
        my = (py(p1[1]) + py(p2[1])) / 2
        parts.append(f'<text x="{_dec(mx)}" y="{_dec(my + 14)}" '
                     f'font-size="10" fill="darkred">tie w = {-slope}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _sample_radii(f: LaurentSeries, window: LogRadiusWindow, count: int = 21):
    breaks = [w for w in newton_polygon(f).breakpoints() if window.contains(w)]
    lo, hi = window.lo, window.hi
    anchor = breaks + [w for w in (lo, hi) if w is not None]
    if lo is None:
        lo = (min(anchor) if anchor else Fraction(0)) - 2
    if hi is None:
        hi = (max(anchor) if anchor else Fraction(0)) + 2
    samples = set(breaks)
    if window.contains(lo):
        samples.add(lo)
    if window.contains(hi):
        samples.add(hi)
    if hi > lo:
        step = Fraction(hi - lo, count - 1)
        for t in range(count):
            w = lo + step * t
            if window.contains(w):
                samples.add(w)
    return sorted(samples)


def render_samples_csv(f: LaurentSeries, window: LogRadiusWindow) -> str:
    rows = ["w,value,minimizer"]
    terms = [(e, f.ring.val(c).q) for e, c in sorted(f.support.items())]
    for w in _sample_radii(f, window):
        values = [(v + e * w, e) for e, v in terms]
        best = min(v for v, _ in values)
        indices = sorted(e for v, e in values if v == best)
        rows.append(f"{w},{best},{';'.join(str(e) for e in indices)}")
    return "\n".join(rows) + "\n"


# ---------------------------------------------------------------------------
# entry point


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="ultraseries",
        description="Exact Laurent-series analysis over non-archimedean "
                    "valued fields")
    parser.add_argument("command", choices=("newton", "unit", "invert",
                                            "pole", "discwise", "descend"))
    parser.add_argument("jobfile", help="path to the job description")
    parser.add_argument("--svg", metavar="PATH",
                        help="write the Newton polygon as SVG")
    parser.add_argument("--csv", metavar="PATH",
                        help="write (w, value, minimizer) samples as CSV")
    parser.add_argument("--depth", type=int, metavar="N",
                        help="scan depth for semi-decisions")
    parser.add_argument("--prec", metavar="Q",
                        help="target precision (rational) for inversion")
    args = parser.parse_args(argv)

    try:
        with open(args.jobfile, encoding="utf-8") as handle:
            text = handle.read()
        job = parse_job(text)
        if job.command != args.command:
            raise JobSemanticError(
                f"job file declares command {job.command!r}, "
                f"invoked as {args.command!r}")
        prec = Fraction(args.prec) if args.prec is not None else None
        report, code, polygon = run_job(job, depth=args.depth, prec=prec)
        if args.svg:
            if polygon is None and job.series_kind == "laurent":
                polygon = newton_polygon(job.series)
            if polygon is None:
                raise JobSemanticError(
                    "--svg needs a finite absolute series")
            with open(args.svg, "w", encoding="utf-8") as handle:
                handle.write(render_polygon_svg(polygon))
        if args.csv:
            if job.series_kind != "laurent" or job.window is None:
                raise JobSemanticError(
                    "--csv needs a finite absolute series and a window")
            with open(args.csv, "w", encoding="utf-8") as handle:
                handle.write(render_samples_csv(job.series, job.window))
        sys.stdout.write(json.dumps(report, indent=2) + "\n")
        return code
    except UltraseriesError as exc:
        payload = {"error": exc.code, "message": str(exc)}
        if hasattr(exc, "exponent"):
            payload["exponent"] = exc.exponent
        sys.stderr.write(json.dumps(payload, indent=2) + "\n")
        return EXIT_ERROR
    except OSError as exc:
        sys.stderr.write(json.dumps({"error": "io", "message": str(exc)},
                                    indent=2) + "\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
