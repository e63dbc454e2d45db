"""Exact generalized Routh triangles over the rationals."""

from .cevians import (
    PairClass,
    RouthConfig,
    Vertex,
    cevian_line,
    cevian_point,
    generalized_routh_points,
    pair_class,
    param_of_point,
)
from .errors import (
    BothZero,
    DegeneratePair,
    DegenerateTriangle,
    GeometryError,
    IdenticalLines,
    IdenticalPoints,
    InfinitePoint,
    NotOnSideLine,
    RatioUndefined,
    SingularMap,
)
from .formulas import (
    RatioResult,
    ceva_concurrent,
    cevial_ratio,
    generalized_ratio,
    is_degenerate,
    menelaus_collinear,
    routh_ratio,
)
from .oracle import VerificationReport, affine_invariance_check, ratio_via_coordinates, verify_config
from .param_line import INF, ExtParam, PositionClass, classify_position, ext_param, parse_param
from .projective import AffineMap, HLine, HPoint, Triangle, apply_affine, collinear, join, meet, signed_area

__version__ = "0.1.0"
