"""Independent check of the closed-form ratio by explicit construction.

The oracle builds P, Q, R from line intersections and takes a ratio of
determinant areas; it never evaluates the closed-form polynomials.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .cevians import RouthConfig, generalized_routh_points
from .errors import DegeneratePair, PairError
from .formulas import RatioResult, generalized_ratio
from .param_line import INF, ExtParam
from .projective import AffineMap, Triangle, apply_affine, signed_area

__all__ = [
    "VerificationReport",
    "affine_invariance_check",
    "config_corpus",
    "random_affine_map",
    "random_config",
    "random_param",
    "ratio_via_coordinates",
    "verify_config",
]


def ratio_via_coordinates(t: Triangle, cfg: RouthConfig) -> Fraction:
    P, Q, R = generalized_routh_points(t, cfg)
    A, B, C = t.hpoints
    return signed_area(P, Q, R) / signed_area(A, B, C)


@dataclass(frozen=True)
class VerificationReport:
    config: RouthConfig
    closed_form: RatioResult | PairError
    oracle_value: Fraction | PairError
    agree: bool

    @property
    def ok(self) -> bool:
        return not isinstance(self.closed_form, PairError)


def verify_config(t: Triangle, cfg: RouthConfig) -> VerificationReport:
    """Run both paths on ``cfg``; failures are recorded, never raised."""
    try:
        closed: RatioResult | PairError = generalized_ratio(cfg)
    except PairError as exc:
        closed = exc
    try:
        oracle: Fraction | PairError = ratio_via_coordinates(t, cfg)
    except DegeneratePair as exc:
        oracle = exc

    if isinstance(closed, PairError) and isinstance(oracle, PairError):
        agree = closed.diagnosis == oracle.diagnosis
    elif isinstance(closed, PairError) or isinstance(oracle, PairError):
        agree = False
    else:
        agree = closed.value == oracle
    return VerificationReport(cfg, closed, oracle, agree)


def affine_invariance_check(cfg: RouthConfig, maps: Iterable[AffineMap]) -> bool:
    base = Triangle.canonical()
    expected = ratio_via_coordinates(base, cfg)
    return all(
        ratio_via_coordinates(apply_affine(f, base), cfg) == expected for f in maps
    )


def random_affine_map(rng: random.Random, bound: int = 5) -> AffineMap:
    """Integer affine map with entries in ``[-bound, bound]``, det != 0."""
    while True:
        a, b, c, d = (rng.randint(-bound, bound) for _ in range(4))
        if a * d - b * c != 0:
            break
    return AffineMap(((a, b), (c, d)), (rng.randint(-bound, bound), rng.randint(-bound, bound)))


_SPECIAL = (ExtParam(0, 1), INF, ExtParam(-1, 1))


def random_param(rng: random.Random, bound: int = 20, special_rate: float = 0.15) -> ExtParam:
    """Rational with numerator and denominator in ``[-bound, bound]``.

    With probability ``special_rate`` one of 0, ∞, -1 is returned instead.
    """
    if rng.random() < special_rate:
        return rng.choice(_SPECIAL)
    num = rng.randint(-bound, bound)
    den = 0
    while den == 0:
        den = rng.randint(-bound, bound)
    return ExtParam(num, den)


def random_config(rng: random.Random, bound: int = 20, special_rate: float = 0.15) -> RouthConfig:
    return RouthConfig(*(random_param(rng, bound, special_rate) for _ in range(6)))


def config_corpus(
    seed: int,
    count: int,
    bound: int = 20,
    forced: Optional[Sequence[ExtParam]] = _SPECIAL,
) -> list[RouthConfig]:
    """Seeded batch of random configs.

    Each value in ``forced`` is placed in every one of the six slots at
    least once, so special parameters are always exercised.
    """
    rng = random.Random(seed)
    out = []
    for value in forced or ():
        for slot in range(6):
            params = [random_param(rng, bound) for _ in range(6)]
            params[slot] = value
            out.append(RouthConfig(*params))
    while len(out) < count:
        out.append(random_config(rng, bound))
    return out
