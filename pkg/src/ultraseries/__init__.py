"""Exact Laurent-series analysis over non-archimedean valued fields.

The package computes with Newton polygons, tropical (piecewise-linear)
minimization, invertibility on annuli via dominant monomials, certified
inversion, pole detection at punctured-disc origins, and coefficientwise
descent for relative series -- all in exact rational arithmetic.
"""

from .annuli import (
    AnnulusDomain,
    UnitDecomposition,
    converges_on,
    inverse_stream,
    invert,
    is_unit,
    unit_decomposition,
)
from .errors import (
    ContradictionError,
    DimensionMismatchError,
    DomainError,
    EmptyWindowError,
    FieldMismatchError,
    GapVanishesError,
    JobParseError,
    JobSemanticError,
    NonGenericPointError,
    NontrivialAuxSupportError,
    PrecisionError,
    PthRootCoefficientError,
    PthRootExponentError,
    RepresentationError,
    TruncationError,
    UltraseriesError,
    UnsupportedFieldError,
    ZeroSeriesError,
)
from .fields import (
    FLElement,
    FormalLaurent,
    PAdicRationals,
    PolyradiusExtension,
    PrimeField,
    PRElement,
    Rationals,
)
from .mero import (
    DominanceAtZero,
    Essential,
    GenericPoint,
    Meromorphic,
    MeroExtension,
    TieFamily,
    check_invertible_near_zero,
    descend_kr,
    discwise_meromorphy,
    fiber_pullback,
    pole_order,
)
from .newton import (
    DominanceCertificate,
    NewtonPolygon,
    NoDominance,
    ProfilePiece,
    TieWitness,
    dominant_monomial,
    minimizer_profile,
    newton_polygon,
    residue_leading_part,
    tropicalize,
)
from .relative import RelativePolynomial, RelativePolynomialRing, relative_series
from .series import (
    FiniteBelow,
    INFINITE_BELOW,
    LaurentSeries,
    StreamSeries,
    TailCertificate,
    UNKNOWN,
    Undetermined,
    laurent_from_pairs,
    monomial,
    pth_power,
    pth_root,
    ser_add,
    ser_mul,
    ser_neg,
    ser_pow,
    ser_scale,
    ser_shift,
    ser_sub,
    verify_power_identity,
)
from .valuations import INFINITY, LexVal, TropVal, lex_project
from .windows import LogRadiusWindow, parse_window

__version__ = "0.1.0"
