"""Closed-form signed area ratios of generalized Routh, Routh and cevial triangles.

Every formula is written homogeneously in the ``(p, q)`` coordinates of the
parameters, so infinite parameters are ordinary inputs. The ratio is signed:
negative means PQR is oriented opposite to ABC.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .cevians import RouthConfig, pair_class, pair_factor
from .errors import RatioUndefined
from .param_line import ExtParam, ParamLike, as_param

__all__ = [
    "RatioResult",
    "ceva_concurrent",
    "cevial_ratio",
    "generalized_numerator",
    "generalized_ratio",
    "is_degenerate",
    "menelaus_collinear",
    "routh_ratio",
]


@dataclass(frozen=True)
class RatioResult:
    value: Fraction
    degenerate_numerator: bool

    @classmethod
    def of(cls, num: int, den: int) -> "RatioResult":
        return cls(Fraction(num, den), num == 0)

    def to_json(self) -> dict:
        return {
            "numerator": str(self.value.numerator),
            "denominator": str(self.value.denominator),
            "degenerate": self.degenerate_numerator,
        }


def _check_pairs(pairs: Iterable[tuple[str, ExtParam, ExtParam]]) -> int:
    """Product of the pair factors; raises on the first vanishing one."""
    den = 1
    for label, s1, s2 in pairs:
        f = pair_factor(s1, s2)
        if f == 0:
            raise RatioUndefined(label, pair_class(s1, s2))
        den *= f
    return den


def generalized_numerator(cfg: RouthConfig) -> int:
    """Homogenized ``1 - xyw - xzv - uyz + xyz + xyzuvw``."""
    Px, Py, Pz, Pu, Pv, Pw = (t.p for t in cfg.as_tuple())
    Qx, Qy, Qz, Qu, Qv, Qw = (t.q for t in cfg.as_tuple())
    return (
        Qx * Qy * Qz * Qu * Qv * Qw
        - Px * Py * Pw * Qz * Qu * Qv
        - Px * Pz * Pv * Qy * Qu * Qw
        - Pu * Py * Pz * Qx * Qv * Qw
        + Px * Py * Pz * Qu * Qv * Qw
        + Px * Py * Pz * Pu * Pv * Pw
    )


def generalized_ratio(cfg: RouthConfig) -> RatioResult:
    """Signed area of PQR over that of ABC for six cevians."""
    den = _check_pairs(cfg.pairs())
    return RatioResult.of(generalized_numerator(cfg), den)


def _triple(x, y, z) -> tuple[ExtParam, ExtParam, ExtParam]:
    return as_param(x), as_param(y), as_param(z)


def _routh_pairs(x, y, z):
    return (("P", x, y), ("Q", y, z), ("R", z, x))


def _cevial_pairs(x, y, z):
    zero = ExtParam(0, 1)
    return (("P", x, zero), ("Q", y, zero), ("R", z, zero))


def cevial_ratio(x: ParamLike, y: ParamLike, z: ParamLike) -> RatioResult:
    """Area of the triangle of cevian feet ``A_x B_y C_z``: ``(xyz + 1) / ((1+x)(1+y)(1+z))``."""
    x, y, z = _triple(x, y, z)
    den = _check_pairs(_cevial_pairs(x, y, z))
    num = x.p * y.p * z.p + x.q * y.q * z.q
    return RatioResult.of(num, den)


def routh_ratio(x: ParamLike, y: ParamLike, z: ParamLike) -> RatioResult:
    """Routh's ``(xyz - 1)^2 / ((1+x+xy)(1+y+yz)(1+z+zx))``."""
    x, y, z = _triple(x, y, z)
    den = _check_pairs(_routh_pairs(x, y, z))
    num = (x.p * y.p * z.p - x.q * y.q * z.q) ** 2
    return RatioResult.of(num, den)


def is_degenerate(cfg: RouthConfig) -> bool:
    """True iff P, Q, R are collinear (the numerator vanishes)."""
    _check_pairs(cfg.pairs())
    return generalized_numerator(cfg) == 0


def ceva_concurrent(x: ParamLike, y: ParamLike, z: ParamLike) -> bool:
    """True iff ``AA_x``, ``BB_y``, ``CC_z`` pass through one point (``xyz = 1``)."""
    x, y, z = _triple(x, y, z)
    _check_pairs(_routh_pairs(x, y, z))
    return x.p * y.p * z.p == x.q * y.q * z.q


def menelaus_collinear(x: ParamLike, y: ParamLike, z: ParamLike) -> bool:
    """True iff the feet ``A_x``, ``B_y``, ``C_z`` are collinear (``xyz = -1``)."""
    x, y, z = _triple(x, y, z)
    _check_pairs(_cevial_pairs(x, y, z))
    return x.p * y.p * z.p == -(x.q * y.q * z.q)
