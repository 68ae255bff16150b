"""Exception hierarchy.

Every exception carries a stable ``code`` string; the command-line front end
maps exceptions to error reports through these codes, so they are part of the
public contract and must not be renamed casually.
"""

from __future__ import annotations


class UltraseriesError(Exception):
    """Base class for all library errors."""

    code = "error"


class RepresentationError(UltraseriesError):
    """Malformed element: bad literal, unknown symbol, composite prime, ..."""

    code = "representation"


class PrecisionError(UltraseriesError):
    """A result would depend on coefficients that are not known exactly."""

    code = "precision"


class TruncationError(PrecisionError):
    """An operation needs terms beyond the declared truncation order."""

    code = "truncation"


class FieldMismatchError(UltraseriesError):
    """Operands belong to different coefficient fields or rings."""

    code = "field_mismatch"


class UnsupportedFieldError(UltraseriesError):
    """The operation needs a field property this field lacks (e.g. char p)."""

    code = "unsupported_field"


class EmptyWindowError(UltraseriesError):
    """A log-radius window is empty or an intersection came out empty."""

    code = "empty_window"


class ZeroSeriesError(UltraseriesError):
    """The zero series has no Newton polygon / dominance data."""

    code = "zero_series"


class NonUnitError(UltraseriesError):
    """Inversion or decomposition was requested for a non-unit."""

    code = "non_unit"


class GapVanishesError(UltraseriesError):
    """The dominance gap is not bounded away from 0 on the (open) window.

    ``subwindow`` suggests a compact subwindow on which the gap is positive,
    so the caller can retry there.
    """

    code = "gap_vanishes"

    def __init__(self, message, subwindow=None):
        super().__init__(message)
        self.subwindow = subwindow


class DomainError(UltraseriesError):
    """A convergence certificate does not cover the requested window."""

    code = "domain"


class PthRootExponentError(UltraseriesError):
    """A support exponent is not divisible by p."""

    code = "pth_root_exponent"


class PthRootCoefficientError(UltraseriesError):
    """A coefficient has no p-th root in the field."""

    code = "pth_root_coefficient"


class ContradictionError(UltraseriesError):
    """A supplied certificate disagrees with exactly computed coefficients."""

    code = "contradiction"


class NonGenericPointError(UltraseriesError):
    """The sample point lies in the zero set of a nonzero coefficient.

    ``exponent`` names the series exponent whose coefficient vanished at the
    point without being the zero polynomial.
    """

    code = "non_generic_point"

    def __init__(self, exponent, message=None):
        super().__init__(message or f"coefficient at exponent {exponent} vanishes "
                         "at the sample point but is not the zero polynomial")
        self.exponent = exponent


class NontrivialAuxSupportError(UltraseriesError):
    """Descent to the base field is obstructed by an auxiliary monomial."""

    code = "nontrivial_aux_support"

    def __init__(self, exponent, multi_index):
        super().__init__(
            f"coefficient at exponent {exponent} has auxiliary support "
            f"{multi_index}; descent to the base field is impossible")
        self.exponent = exponent
        self.multi_index = multi_index


class DimensionMismatchError(UltraseriesError):
    """A point's coordinate count does not match the variable count."""

    code = "dimension_mismatch"


class JobParseError(UltraseriesError):
    """Syntax error in a job file, with 1-based position."""

    code = "job_parse"

    def __init__(self, message, line, column=1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class JobSemanticError(UltraseriesError):
    """A job file parsed but describes an invalid object."""

    code = "job_semantic"

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
